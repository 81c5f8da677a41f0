//! Regenerates the generator files in `data/`.
//!
//! U3(3) and U4(2) are built as the groups generated by unitary
//! transvections, acting on the isotropic points of the Hermitian form with
//! antidiagonal Gram matrix. A short generating set is then picked out of
//! the element list. M11 uses its standard pair of generators on 11 points.
//!
//! ```text
//! cargo run --release -p samesize --example derive_generators -- crates/core/data
//! ```

use std::collections::HashMap;
use std::path::PathBuf;
use std::sync::Arc;

use samesize::catalog::GeneratorFile;
use samesize::constructors::{classical_order, projective_points, GroupFamily, ProjectivePoint};
use samesize::gf::{FieldElement, FieldSpec};
use samesize::perm::parse_cycles;
use samesize::{PermGroup, Permutation};

fn conj(x: &FieldElement, r: u64) -> FieldElement {
    x.pow(r)
}

/// `h(v, w) = Σ v_i · conj(w_{n−1−i})`.
fn form(v: &[FieldElement], w: &[FieldElement], r: u64) -> FieldElement {
    let n = v.len();
    let mut acc = v[0].spec().zero();
    for i in 0..n {
        acc = acc
            .add(&v[i].mul(&conj(&w[n - 1 - i], r)).unwrap())
            .unwrap();
    }
    acc
}

/// `v ↦ v + a·h(v,u)·u` as a matrix acting on row vectors.
fn transvection(u: &[FieldElement], a: &FieldElement, r: u64) -> Vec<Vec<FieldElement>> {
    let n = u.len();
    let spec = a.spec();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let delta = if i == j { spec.one() } else { spec.zero() };
                    let t = a.mul(&conj(&u[n - 1 - i], r)).unwrap().mul(&u[j]).unwrap();
                    delta.add(&t).unwrap()
                })
                .collect()
        })
        .collect()
}

fn row_times(v: &[FieldElement], m: &[Vec<FieldElement>]) -> Vec<FieldElement> {
    let n = v.len();
    (0..n)
        .map(|j| {
            (0..n).fold(v[0].spec().zero(), |acc, i| {
                acc.add(&v[i].mul(&m[i][j]).unwrap()).unwrap()
            })
        })
        .collect()
}

fn unitary_group(n: usize, q: u64) -> PermGroup {
    let spec: Arc<FieldSpec> = FieldSpec::with_order(q * q).unwrap();
    let r = q;
    let elems = |p: &ProjectivePoint| -> Vec<FieldElement> {
        p.coords().iter().map(|&c| spec.element(c)).collect()
    };
    let points: Vec<ProjectivePoint> = projective_points(n, &spec)
        .into_iter()
        .filter(|p| {
            let v = elems(p);
            form(&v, &v, r).is_zero()
        })
        .collect();
    let index: HashMap<&ProjectivePoint, usize> =
        points.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let trace_zero: Vec<FieldElement> = spec
        .elements()
        .filter(|a| !a.is_zero() && a.add(&conj(a, r)).unwrap().is_zero())
        .collect();
    let mut gens = Vec::new();
    for u in &points {
        let uv = elems(u);
        for a in &trace_zero {
            let m = transvection(&uv, a, r);
            let images = points
                .iter()
                .map(|p| {
                    let image = ProjectivePoint::from_elements(&row_times(&elems(p), &m)).unwrap();
                    index[&image]
                })
                .collect();
            gens.push(Permutation::new(images).unwrap());
        }
    }
    PermGroup::new(points.len(), gens).unwrap()
}

/// First pair of elements (in a fixed pseudo-random order) that generates
/// the whole group.
fn two_generators(g: &PermGroup) -> PermGroup {
    let elements = g.enumerate_elements(1_000_000).unwrap();
    let mut state = 0x2545_f491_4f6c_dd1d_u64;
    let mut next = || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state % elements.len() as u64) as usize
    };
    loop {
        let pair = vec![elements[next()].clone(), elements[next()].clone()];
        let h = PermGroup::new(g.degree(), pair).unwrap();
        if h.order() == g.order() {
            return h;
        }
    }
}

fn main() {
    let out: PathBuf = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "data".into())
        .into();
    std::fs::create_dir_all(&out).unwrap();

    for (family, file_name, n, q) in [
        (GroupFamily::Psu { n: 3, q: 3 }, "u3_3.gens", 3, 3),
        (GroupFamily::Psu { n: 4, q: 2 }, "u4_2.gens", 4, 2),
    ] {
        let expected = classical_order(family).unwrap();
        let full = unitary_group(n, q);
        assert_eq!(full.order(), expected, "{family}");
        let small = two_generators(&full);
        let mut file = GeneratorFile::from_group(Some(&family.to_string()), &small);
        file.comments.push(format!(
            "unitary transvection group on the {} isotropic points of PG({}, {})",
            small.degree(),
            n - 1,
            q * q
        ));
        std::fs::write(out.join(file_name), file.to_string()).unwrap();
        println!(
            "{family}: degree {}, order {}",
            small.degree(),
            small.order()
        );
    }

    let m11 = PermGroup::new(
        11,
        vec![
            parse_cycles(11, "(1,2,3,4,5,6,7,8,9,10,11)").unwrap(),
            parse_cycles(11, "(3,7,11,8)(4,10,5,6)").unwrap(),
        ],
    )
    .unwrap();
    assert_eq!(m11.order(), GroupFamily::M11.order().unwrap());
    let mut file = GeneratorFile::from_group(Some("M11"), &m11);
    file.comments
        .push("sharply 4-transitive on 11 points".into());
    std::fs::write(out.join("m11.gens"), file.to_string()).unwrap();
    println!("M11: degree 11, order {}", m11.order());
}
