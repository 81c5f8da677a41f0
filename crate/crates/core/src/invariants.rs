//! Conjugacy classes and the class-size invariants built from them.
//!
//! For a finite group G with class sizes n₁ < n₂ < … (the conjugate type
//! vector V(G)), `u_G(n)` counts the elements whose class has size `n`, so
//! `u_G(n) = n · #{classes of size n}`. The same-size conjugacy class set
//! U(G) is the set of distinct values `u_G(n)`. Summing `u_G(n)` over the
//! distinct sizes gives |G|, and `n` always divides `u_G(n)`.
//!
//! Classes are found by brute force: enumerate G, tabulate how each generator
//! conjugates each element, and take connected components. That is exact and
//! comfortably fast up to a few million elements.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::perm::{compose_into, conjugate_into, ElementTable, PermGroup, Permutation};
use crate::uset::arith::prime_factors;

/// Default ceiling on group order for [`centralizer_count`], which does
/// quadratic work.
pub const DEFAULT_CENTRALIZER_CAP: u64 = 10_000;

/// One conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjClass {
    /// The lexicographically smallest element (by image array).
    pub representative: Permutation,
    pub size: u64,
    pub element_order: u64,
}

impl ConjClass {
    pub fn centralizer_order(&self, group_order: u64) -> u64 {
        group_order / self.size
    }
}

/// Elements of a group together with the class each belongs to.
pub struct ClassPartition {
    pub elements: ElementTable,
    /// `class_of[i]` indexes into `classes`.
    pub class_of: Vec<u32>,
    pub classes: Vec<ConjClass>,
}

/// Computes all conjugacy classes and the element-to-class map. Classes are
/// ordered by size, then by representative.
pub fn class_partition(g: &PermGroup, cap: u64) -> Result<ClassPartition> {
    let elements = g.element_table(cap)?;
    let gens: Vec<Permutation> = g.reduced_generators();
    let ng = gens.len();
    let degree = elements.degree();
    let n = elements.len();

    // conj[i * ng + j] = index of gens[j]⁻¹ · x_i · gens[j]
    let mut conj = vec![0u32; n * ng];
    conj.par_chunks_mut(ng).enumerate().for_each_init(
        || vec![0u16; degree],
        |buf, (i, row)| {
            let x = elements.get(i);
            for (slot, s) in row.iter_mut().zip(&gens) {
                conjugate_into(x, s.images(), buf);
                *slot = elements
                    .index_of(buf)
                    .expect("group is closed under conjugation") as u32;
            }
        },
    );

    const UNSEEN: u32 = u32::MAX;
    let mut raw_class = vec![UNSEEN; n];
    let mut members: Vec<Vec<u32>> = Vec::new();
    for start in 0..n {
        if raw_class[start] != UNSEEN {
            continue;
        }
        let id = members.len() as u32;
        raw_class[start] = id;
        let mut orbit = vec![start as u32];
        let mut k = 0;
        while k < orbit.len() {
            let x = orbit[k] as usize;
            for &y in &conj[x * ng..(x + 1) * ng] {
                if raw_class[y as usize] == UNSEEN {
                    raw_class[y as usize] = id;
                    orbit.push(y);
                }
            }
            k += 1;
        }
        members.push(orbit);
    }

    let mut classes: Vec<(ConjClass, u32)> = members
        .iter()
        .enumerate()
        .map(|(id, m)| {
            let rep = *m
                .iter()
                .min_by(|&&a, &&b| elements.get(a as usize).cmp(elements.get(b as usize)))
                .unwrap();
            let representative = elements.permutation(rep as usize);
            let element_order = representative.order();
            (
                ConjClass {
                    representative,
                    size: m.len() as u64,
                    element_order,
                },
                id as u32,
            )
        })
        .collect();
    classes.sort_by(|(a, _), (b, _)| {
        a.size
            .cmp(&b.size)
            .then_with(|| a.representative.images().cmp(b.representative.images()))
    });
    let mut relabel = vec![0u32; classes.len()];
    for (new, (_, old)) in classes.iter().enumerate() {
        relabel[*old as usize] = new as u32;
    }
    let class_of = raw_class.iter().map(|&c| relabel[c as usize]).collect();
    Ok(ClassPartition {
        elements,
        class_of,
        classes: classes.into_iter().map(|(c, _)| c).collect(),
    })
}

/// Conjugacy classes ordered by size, then by representative.
pub fn conjugacy_classes(g: &PermGroup, cap: u64) -> Result<Vec<ConjClass>> {
    Ok(class_partition(g, cap)?.classes)
}

/// The class-size invariants of a group.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantProfile {
    /// |G|
    pub order: u64,
    /// One entry per class, ascending.
    pub class_sizes: Vec<u64>,
    /// Distinct class sizes, ascending.
    #[serde(rename = "V")]
    pub v: Vec<u64>,
    /// |V| − 1
    pub rank: usize,
    /// Number of conjugacy classes.
    pub class_count: usize,
    /// Distinct size `n` ↦ `u_G(n)`.
    pub u_map: BTreeMap<u64, u64>,
    /// Distinct values of `u_map`.
    #[serde(rename = "U")]
    pub u: BTreeSet<u64>,
    /// Primes dividing |G|.
    pub pi: Vec<u64>,
}

impl InvariantProfile {
    pub fn from_class_sizes(order: u64, sizes: impl IntoIterator<Item = u64>) -> Self {
        let mut class_sizes: Vec<u64> = sizes.into_iter().collect();
        class_sizes.sort_unstable();
        let mut u_map: BTreeMap<u64, u64> = BTreeMap::new();
        for &n in &class_sizes {
            *u_map.entry(n).or_insert(0) += n;
        }
        let v: Vec<u64> = u_map.keys().copied().collect();
        Self {
            order,
            class_count: class_sizes.len(),
            rank: v.len().saturating_sub(1),
            u: u_map.values().copied().collect(),
            pi: prime_factors(order),
            class_sizes,
            v,
            u_map,
        }
    }

    /// `u_G(n)` for each distinct size, in ascending order of `n`. Unlike
    /// [`Self::u`] this keeps repeated values.
    pub fn u_multiset(&self) -> Vec<u64> {
        self.u_map.values().copied().collect()
    }

    /// Union of the prime divisors of the class sizes.
    pub fn primes_of_class_sizes(&self) -> Vec<u64> {
        let set: BTreeSet<u64> = self.v.iter().flat_map(|&n| prime_factors(n)).collect();
        set.into_iter().collect()
    }

    pub fn center_order(&self) -> u64 {
        self.u_map.get(&1).copied().unwrap_or(0)
    }
}

/// Number of distinct values taken by the conjugate type vector, minus one.
pub fn conjugate_type_rank(profile: &InvariantProfile) -> usize {
    profile.rank
}

/// The full invariant profile of `g`, enumerating at most `cap` elements.
pub fn profile(g: &PermGroup, cap: u64) -> Result<InvariantProfile> {
    let classes = conjugacy_classes(g, cap)?;
    Ok(InvariantProfile::from_class_sizes(
        g.order(),
        classes.iter().map(|c| c.size),
    ))
}

/// |Cent(G)|: the number of distinct subgroups C_G(x), x ∈ G. Each
/// centralizer is computed by testing every element for commutation with
/// `x`, so the cost is quadratic in |G|.
pub fn centralizer_count(g: &PermGroup, cap: u64) -> Result<usize> {
    let elements = g.element_table(cap)?;
    let degree = elements.degree();
    let n = elements.len();
    let centralizers: Vec<Vec<u32>> = (0..n)
        .into_par_iter()
        .map_init(
            || (vec![0u16; degree], vec![0u16; degree]),
            |(xy, yx), i| {
                let x = elements.get(i);
                (0..n)
                    .filter(|&j| {
                        let y = elements.get(j);
                        compose_into(x, y, xy);
                        compose_into(y, x, yx);
                        xy == yx
                    })
                    .map(|j| j as u32)
                    .collect()
            },
        )
        .collect();
    let distinct: HashSet<&[u32]> = centralizers.iter().map(Vec::as_slice).collect();
    Ok(distinct.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{alternating_group, psl_group, symmetric_group};
    use crate::perm::DEFAULT_ENUMERATION_CAP as CAP;

    fn sizes(g: &PermGroup) -> Vec<u64> {
        let mut s: Vec<u64> = conjugacy_classes(g, CAP)
            .unwrap()
            .iter()
            .map(|c| c.size)
            .collect();
        s.sort();
        s
    }

    #[test]
    fn trivial_group() {
        let g = PermGroup::trivial(3);
        assert_eq!(sizes(&g), vec![1]);
        let p = profile(&g, CAP).unwrap();
        assert_eq!(conjugate_type_rank(&p), 0);
        assert_eq!(centralizer_count(&g, 100).unwrap(), 1);
    }

    #[test]
    fn symmetric_three() {
        let g = symmetric_group(3).unwrap();
        assert_eq!(sizes(&g), vec![1, 2, 3]);
        // C(e) = S3, three centralizers <t> of transpositions, and A3 for both
        // 3-cycles.
        assert_eq!(centralizer_count(&g, 100).unwrap(), 5);
    }

    #[test]
    fn a5_classes() {
        let g = alternating_group(5).unwrap();
        assert_eq!(sizes(&g), vec![1, 12, 12, 15, 20]);
        let classes = conjugacy_classes(&g, CAP).unwrap();
        let orders: Vec<u64> = classes.iter().map(|c| c.element_order).collect();
        assert_eq!(orders, vec![1, 5, 5, 2, 3]);
        assert!(classes[0].representative.is_identity());
    }

    #[test]
    fn psl211_classes() {
        let g = psl_group(2, 11).unwrap();
        assert_eq!(sizes(&g), vec![1, 55, 60, 60, 110, 110, 132, 132]);
        let p = profile(&g, CAP).unwrap();
        assert_eq!(p.v, vec![1, 55, 60, 110, 132]);
        assert_eq!(conjugate_type_rank(&p), 4);
        assert_eq!(p.u, BTreeSet::from([1, 55, 120, 220, 264]));
    }

    #[test]
    fn class_sizes_divide_order_and_partition() {
        for g in [alternating_group(6).unwrap(), psl_group(2, 8).unwrap()] {
            let part = class_partition(&g, CAP).unwrap();
            let total: u64 = part.classes.iter().map(|c| c.size).sum();
            assert_eq!(total, g.order());
            for c in &part.classes {
                assert_eq!(g.order() % c.size, 0);
            }
            let mut counts = vec![0u64; part.classes.len()];
            for &c in &part.class_of {
                counts[c as usize] += 1;
            }
            let expected: Vec<u64> = part.classes.iter().map(|c| c.size).collect();
            assert_eq!(counts, expected);
        }
    }

    #[test]
    fn profile_from_sizes() {
        // A6: 1, 40, 40, 45, 72, 72, 90
        let p = InvariantProfile::from_class_sizes(360, [1, 45, 40, 40, 90, 72, 72]);
        assert_eq!(p.v, vec![1, 40, 45, 72, 90]);
        assert_eq!(p.u_map[&40], 80);
        assert_eq!(p.u, BTreeSet::from([1, 45, 80, 90, 144]));
        assert_eq!(p.class_count, 7);
        assert_eq!(p.rank, 4);
        assert_eq!(p.pi, vec![2, 3, 5]);
    }

    #[test]
    fn profile_json_field_names() {
        let p = InvariantProfile::from_class_sizes(6, [1, 2, 3]);
        let json = serde_json::to_value(&p).unwrap();
        for key in ["order", "class_sizes", "V", "rank", "u_map", "U", "pi"] {
            assert!(json.get(key).is_some(), "missing {key}");
        }
        let back: InvariantProfile = serde_json::from_value(json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn too_large_is_an_error() {
        let g = alternating_group(6).unwrap();
        assert!(matches!(
            profile(&g, 100),
            Err(crate::Error::GroupTooLarge {
                order: 360,
                limit: 100
            })
        ));
        assert!(centralizer_count(&g, 100).is_err());
    }
}
