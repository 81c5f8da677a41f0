use std::fmt;

use crate::error::{Error, Result};

/// Largest supported degree; points are stored as `u16`.
pub const MAX_DEGREE: usize = 1 << 16;

/// A bijection of `{0, …, degree − 1}`, stored as its image array.
///
/// Products are read left to right: `a.then(&b)` applies `a` first and then
/// `b`, so `a.then(&b).apply(i) == b.apply(a.apply(i))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Box<[u16]>,
}

impl Permutation {
    /// Builds a permutation from its image array, checking that it is a
    /// bijection.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let degree = images.len();
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!(
                "degree {degree} outside 1..={MAX_DEGREE}"
            )));
        }
        let mut seen = vec![false; degree];
        for &x in &images {
            if x >= degree {
                return Err(Error::PointOutOfRange { point: x, degree });
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!(
                    "point {x} is the image of two points"
                )));
            }
        }
        Ok(Self {
            images: images.into_iter().map(|x| x as u16).collect(),
        })
    }

    /// Wraps an image array already known to be a bijection.
    pub(crate) fn from_raw(images: Box<[u16]>) -> Self {
        debug_assert!(is_bijection(&images));
        Self { images }
    }

    pub fn identity(degree: usize) -> Self {
        assert!(degree > 0 && degree <= MAX_DEGREE, "bad degree {degree}");
        Self {
            images: (0..degree).map(|i| i as u16).collect(),
        }
    }

    /// Builds a permutation from 0-based cycles.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self> {
        if degree == 0 || degree > MAX_DEGREE {
            return Err(Error::InvalidPermutation(format!(
                "degree {degree} outside 1..={MAX_DEGREE}"
            )));
        }
        let mut images: Vec<usize> = (0..degree).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for &x in cycle.iter() {
                if x >= degree {
                    return Err(Error::PointOutOfRange { point: x, degree });
                }
                if std::mem::replace(&mut used[x], true) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {x} occurs in more than one cycle position"
                    )));
                }
            }
            for (i, &x) in cycle.iter().enumerate() {
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::new(images)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn images(&self) -> &[u16] {
        &self.images
    }

    /// Image array widened to `usize`.
    pub fn image_vec(&self) -> Vec<usize> {
        self.images.iter().map(|&x| x as usize).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &x)| i == x as usize)
    }

    /// `self` followed by `other`. Panics on a degree mismatch; use
    /// [`compose`] for the checked form.
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Self {
            images: self
                .images
                .iter()
                .map(|&x| other.images[x as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u16; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u16;
        }
        Self { images: inv.into() }
    }

    /// `g⁻¹ · self · g`, i.e. relabels the points of `self` through `g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        let mut out = vec![0u16; self.degree()];
        conjugate_into(&self.images, &g.images, &mut out);
        Self { images: out.into() }
    }

    pub fn smallest_moved_point(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &x)| i != x as usize)
            .map(|(i, _)| i)
    }

    /// Nontrivial cycles, each starting at its smallest point, in order of
    /// their smallest points.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    /// Element order: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }
}

/// Checked left-to-right product: the result maps `i` to `b(a(i))`.
pub fn compose(a: &Permutation, b: &Permutation) -> Result<Permutation> {
    if a.degree() != b.degree() {
        return Err(Error::DegreeMismatch {
            left: a.degree(),
            right: b.degree(),
        });
    }
    Ok(a.then(b))
}

pub fn inverse(a: &Permutation) -> Permutation {
    a.inverse()
}

/// Writes `g⁻¹ x g` into `out`. Under the left-to-right convention this maps
/// `g(i)` to `g(x(i))`.
#[inline]
pub(crate) fn conjugate_into(x: &[u16], g: &[u16], out: &mut [u16]) {
    for (i, &xi) in x.iter().enumerate() {
        out[g[i] as usize] = g[xi as usize];
    }
}

/// Writes `a` followed by `b` into `out`.
#[inline]
pub(crate) fn compose_into(a: &[u16], b: &[u16], out: &mut [u16]) {
    for (o, &x) in out.iter_mut().zip(a) {
        *o = b[x as usize];
    }
}

fn is_bijection(images: &[u16]) -> bool {
    let mut seen = vec![false; images.len()];
    images
        .iter()
        .all(|&x| (x as usize) < images.len() && !std::mem::replace(&mut seen[x as usize], true))
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({:?})", self.images)
    }
}

/// Displays 1-based disjoint cycle notation, `()` for the identity.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::cycles::format_cycles(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(degree, cycles).unwrap()
    }

    #[test]
    fn compose_with_identity() {
        let b = cyc(5, &[&[0, 1, 2]]);
        assert_eq!(compose(&Permutation::identity(5), &b).unwrap(), b);
    }

    #[test]
    fn involution_squared_is_identity() {
        let a = cyc(3, &[&[0, 1]]);
        assert!(compose(&a, &a).unwrap().is_identity());
    }

    #[test]
    fn left_to_right_convention() {
        // (0 1) first: 0->1, then (1 2): 1->2, so 0->2.
        // 1->0->0, 2->2->1. Images [2, 0, 1].
        // The other convention would give (1 2) first: [1, 2, 0].
        let a = cyc(3, &[&[0, 1]]);
        let b = cyc(3, &[&[1, 2]]);
        let ab = compose(&a, &b).unwrap();
        assert_eq!(ab.image_vec(), vec![2, 0, 1]);
        assert_eq!(ab, cyc(3, &[&[0, 2, 1]]));
    }

    #[test]
    fn degree_mismatch_is_an_error() {
        let err = compose(&Permutation::identity(3), &Permutation::identity(4)).unwrap_err();
        assert!(matches!(err, Error::DegreeMismatch { left: 3, right: 4 }));
    }

    #[test]
    fn inverses() {
        let id = Permutation::identity(4);
        assert_eq!(id.inverse(), id);
        let t = cyc(3, &[&[0, 1]]);
        assert_eq!(t.inverse(), t);
        let c = cyc(3, &[&[0, 1, 2]]);
        assert_eq!(c.inverse(), cyc(3, &[&[0, 2, 1]]));
        assert!(c.then(&c.inverse()).is_identity());
    }

    #[test]
    fn rejects_non_bijections() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(matches!(
            Permutation::new(vec![0, 3, 1]),
            Err(Error::PointOutOfRange {
                point: 3,
                degree: 3
            })
        ));
        assert!(Permutation::new(vec![]).is_err());
    }

    #[test]
    fn conjugation_relabels_cycles() {
        let x = cyc(4, &[&[0, 1]]);
        let g = cyc(4, &[&[1, 2, 3]]);
        let expected = g.inverse().then(&x).then(&g);
        assert_eq!(x.conjugate_by(&g), expected);
        assert_eq!(expected, cyc(4, &[&[0, 2]]));
    }

    #[test]
    fn element_orders() {
        assert_eq!(Permutation::identity(3).order(), 1);
        assert_eq!(cyc(5, &[&[0, 1], &[2, 3, 4]]).order(), 6);
    }
}
