use std::sync::OnceLock;

use super::{Bsgs, ElementTable, Permutation};
use crate::error::{Error, Result};

/// Default ceiling on the number of elements [`PermGroup::enumerate_elements`]
/// will materialize.
pub const DEFAULT_ENUMERATION_CAP: u64 = 2_000_000;

/// A permutation group given by generators. The stabilizer chain is built on
/// first use and cached.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    bsgs: OnceLock<Bsgs>,
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::NoGenerators);
        }
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch {
                left: degree,
                right: g.degree(),
            });
        }
        Ok(Self {
            degree,
            generators,
            bsgs: OnceLock::new(),
        })
    }

    /// Takes the degree from the first generator.
    pub fn from_generators(generators: Vec<Permutation>) -> Result<Self> {
        let degree = generators.first().ok_or(Error::NoGenerators)?.degree();
        Self::new(degree, generators)
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, vec![Permutation::identity(degree)]).unwrap()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn bsgs(&self) -> &Bsgs {
        self.bsgs
            .get_or_init(|| Bsgs::build(self.degree, &self.generators))
    }

    pub fn order(&self) -> u64 {
        self.bsgs().order()
    }

    /// Membership by sifting through the stabilizer chain.
    pub fn contains(&self, p: &Permutation) -> Result<bool> {
        if p.degree() != self.degree {
            return Err(Error::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        Ok(self.bsgs().contains(p))
    }

    /// Orbit of `point` in breadth-first order; each BFS layer is visited in
    /// ascending point order.
    pub fn orbit(&self, point: usize) -> Result<Vec<usize>> {
        if point >= self.degree {
            return Err(Error::PointOutOfRange {
                point,
                degree: self.degree,
            });
        }
        let mut seen = vec![false; self.degree];
        seen[point] = true;
        let mut out = vec![point];
        let mut layer = vec![point];
        while !layer.is_empty() {
            let mut next = Vec::new();
            for &x in &layer {
                for g in &self.generators {
                    let y = g.apply(x);
                    if !std::mem::replace(&mut seen[y], true) {
                        next.push(y);
                    }
                }
            }
            next.sort_unstable();
            out.extend_from_slice(&next);
            layer = next;
        }
        Ok(out)
    }

    /// Greedy subset of the generators: a generator is kept only if it is
    /// not already in the group generated by the ones kept before it.
    pub fn reduced_generators(&self) -> Vec<Permutation> {
        let mut kept: Vec<Permutation> = Vec::new();
        let mut chain: Option<Bsgs> = None;
        for g in &self.generators {
            if g.is_identity() {
                continue;
            }
            if chain.as_ref().is_some_and(|c| c.contains(g)) {
                continue;
            }
            kept.push(g.clone());
            let c = Bsgs::build(self.degree, &kept);
            let done = c.order() == self.order();
            chain = Some(c);
            if done {
                break;
            }
        }
        if kept.is_empty() {
            kept.push(Permutation::identity(self.degree));
        }
        kept
    }

    /// Indexed table of every element, built by a Cayley-graph BFS.
    pub fn element_table(&self, limit: u64) -> Result<ElementTable> {
        let order = self.order();
        if order > limit {
            return Err(Error::GroupTooLarge { order, limit });
        }
        let table = ElementTable::closure(self.degree, &self.reduced_generators(), order as usize);
        assert_eq!(
            table.len() as u64,
            order,
            "Cayley closure disagrees with the stabilizer chain"
        );
        Ok(table)
    }

    /// Every element exactly once, identity first, in BFS layer order.
    pub fn enumerate_elements(&self, limit: u64) -> Result<Vec<Permutation>> {
        Ok(self.element_table(limit)?.to_permutations())
    }

    /// The action on the orbit of `point`, relabelled so that the orbit's
    /// points in ascending order become `0, 1, …`. Also returns that sorted
    /// orbit.
    pub fn action_on_orbit(&self, point: usize) -> Result<(PermGroup, Vec<usize>)> {
        let mut orbit = self.orbit(point)?;
        orbit.sort_unstable();
        let mut label = vec![usize::MAX; self.degree];
        for (i, &x) in orbit.iter().enumerate() {
            label[x] = i;
        }
        let gens = self
            .generators
            .iter()
            .map(|g| Permutation::new(orbit.iter().map(|&x| label[g.apply(x)]).collect()))
            .collect::<Result<Vec<_>>>()?;
        Ok((PermGroup::new(orbit.len(), gens)?, orbit))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(degree, cycles).unwrap()
    }

    fn s5() -> PermGroup {
        PermGroup::new(5, vec![cyc(5, &[&[0, 1]]), cyc(5, &[&[0, 1, 2, 3, 4]])]).unwrap()
    }

    #[test]
    fn orbits() {
        let c3 = PermGroup::new(3, vec![cyc(3, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(c3.orbit(0).unwrap(), vec![0, 1, 2]);
        let t = PermGroup::new(4, vec![cyc(4, &[&[0, 1]])]).unwrap();
        assert_eq!(t.orbit(2).unwrap(), vec![2]);
        let mut o = s5().orbit(0).unwrap();
        o.sort();
        assert_eq!(o, vec![0, 1, 2, 3, 4]);
        assert!(matches!(
            t.orbit(4),
            Err(Error::PointOutOfRange {
                point: 4,
                degree: 4
            })
        ));
    }

    #[test]
    fn membership() {
        let c3 = PermGroup::new(3, vec![cyc(3, &[&[0, 1, 2]])]).unwrap();
        assert!(c3.contains(&cyc(3, &[&[0, 1, 2]])).unwrap());
        assert!(!c3.contains(&cyc(3, &[&[0, 1]])).unwrap());
        assert!(c3.contains(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn generator_validation() {
        assert!(matches!(
            PermGroup::new(3, vec![]),
            Err(Error::NoGenerators)
        ));
        assert!(PermGroup::new(3, vec![Permutation::identity(4)]).is_err());
    }

    #[test]
    fn enumeration_matches_order_and_cap() {
        let g = s5();
        let elems = g.enumerate_elements(1000).unwrap();
        assert_eq!(elems.len(), 120);
        assert!(elems[0].is_identity());
        match g.enumerate_elements(100) {
            Err(Error::GroupTooLarge { order, limit }) => {
                assert_eq!((order, limit), (120, 100));
            }
            other => panic!("expected GroupTooLarge, got {other:?}"),
        }
    }

    #[test]
    fn cyclic_enumeration() {
        let c3 = PermGroup::new(3, vec![cyc(3, &[&[0, 1, 2]])]).unwrap();
        assert_eq!(c3.enumerate_elements(10).unwrap().len(), 3);
    }

    #[test]
    fn reduced_generators_drop_redundancy() {
        let t = cyc(5, &[&[0, 1]]);
        let c = cyc(5, &[&[0, 1, 2, 3, 4]]);
        let g = PermGroup::new(
            5,
            vec![t.clone(), t.then(&c), c.clone(), Permutation::identity(5)],
        )
        .unwrap();
        let reduced = g.reduced_generators();
        assert_eq!(reduced.len(), 2);
        assert_eq!(PermGroup::from_generators(reduced).unwrap().order(), 120);
    }

    #[test]
    fn action_on_an_orbit() {
        // (0 1 2) on the first three points of six, with a disjoint transposition.
        let g = PermGroup::new(6, vec![cyc(6, &[&[0, 1, 2], &[4, 5]])]).unwrap();
        let (h, orbit) = g.action_on_orbit(1).unwrap();
        assert_eq!(orbit, vec![0, 1, 2]);
        assert_eq!(h.degree(), 3);
        assert_eq!(h.order(), 3);
    }
}
