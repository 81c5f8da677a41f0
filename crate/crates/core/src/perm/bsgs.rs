//! Deterministic Schreier–Sims.

use super::Permutation;

/// One level of a stabilizer chain.
#[derive(Debug, Clone)]
pub struct BsgsLevel {
    base_point: usize,
    /// Strong generators fixing all earlier base points (including those
    /// of deeper levels).
    generators: Vec<Permutation>,
    /// Basic orbit in discovery order.
    orbit: Vec<usize>,
    /// `transversal[β]` maps the base point to `β`.
    transversal: Vec<Option<Permutation>>,
}

impl BsgsLevel {
    fn new(base_point: usize, degree: usize) -> Self {
        let mut transversal = vec![None; degree];
        transversal[base_point] = Some(Permutation::identity(degree));
        Self {
            base_point,
            generators: Vec::new(),
            orbit: vec![base_point],
            transversal,
        }
    }

    pub fn base_point(&self) -> usize {
        self.base_point
    }

    pub fn orbit(&self) -> &[usize] {
        &self.orbit
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Coset representative carrying the base point to `point`, if `point`
    /// lies in the basic orbit.
    pub fn representative(&self, point: usize) -> Option<&Permutation> {
        self.transversal.get(point).and_then(Option::as_ref)
    }

    /// Extends the orbit and transversal after generators were added.
    fn close_orbit(&mut self) {
        let mut i = 0;
        while i < self.orbit.len() {
            let beta = self.orbit[i];
            for g in &self.generators {
                let image = g.apply(beta);
                if self.transversal[image].is_none() {
                    let rep = self.transversal[beta].as_ref().unwrap().then(g);
                    self.transversal[image] = Some(rep);
                    self.orbit.push(image);
                }
            }
            i += 1;
        }
    }
}

/// A base and strong generating set.
#[derive(Debug, Clone)]
pub struct Bsgs {
    degree: usize,
    levels: Vec<BsgsLevel>,
}

impl Bsgs {
    /// Runs Schreier–Sims on `generators`. Whenever a generator fixes every
    /// base point chosen so far, its smallest moved point becomes the next
    /// base point, so the result depends only on the generator list.
    pub fn build(degree: usize, generators: &[Permutation]) -> Self {
        let mut gens: Vec<Permutation> = Vec::new();
        for g in generators {
            if !g.is_identity() && !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        let mut base: Vec<usize> = Vec::new();
        for g in &gens {
            if base.iter().all(|&b| g.apply(b) == b) {
                base.push(g.smallest_moved_point().unwrap());
            }
        }
        let mut levels: Vec<BsgsLevel> = Vec::with_capacity(base.len());
        for (l, &b) in base.iter().enumerate() {
            let mut lvl = BsgsLevel::new(b, degree);
            lvl.generators = gens
                .iter()
                .filter(|g| base[..l].iter().all(|&x| g.apply(x) == x))
                .cloned()
                .collect();
            lvl.close_orbit();
            levels.push(lvl);
        }
        let mut bsgs = Self { degree, levels };

        // Work upwards from the deepest level; any Schreier generator that
        // does not sift becomes a new strong generator and the scan restarts
        // at the level where it stopped.
        let mut i = bsgs.levels.len();
        'scan: while i > 0 {
            let level = i - 1;
            let mut k = 0;
            while k < bsgs.levels[level].orbit.len() {
                let beta = bsgs.levels[level].orbit[k];
                for j in 0..bsgs.levels[level].generators.len() {
                    let lvl = &bsgs.levels[level];
                    let s = &lvl.generators[j];
                    let image = s.apply(beta);
                    let u_beta = lvl.transversal[beta].as_ref().unwrap();
                    let u_image = lvl.transversal[image].as_ref().unwrap();
                    let schreier = u_beta.then(s).then(&u_image.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (stop, residue) = bsgs.sift_from(level + 1, &schreier);
                    if residue.is_identity() {
                        continue;
                    }
                    if stop == bsgs.levels.len() {
                        let b = residue.smallest_moved_point().unwrap();
                        bsgs.levels.push(BsgsLevel::new(b, degree));
                    }
                    for l in level + 1..=stop {
                        bsgs.levels[l].generators.push(residue.clone());
                        bsgs.levels[l].close_orbit();
                    }
                    i = stop + 1;
                    continue 'scan;
                }
                k += 1;
            }
            i -= 1;
        }
        bsgs
    }

    /// Sifts `g` through the chain, returning the level where it left the
    /// chain (or `levels.len()`) and the residue.
    pub fn sift(&self, g: &Permutation) -> (usize, Permutation) {
        self.sift_from(0, g)
    }

    fn sift_from(&self, start: usize, g: &Permutation) -> (usize, Permutation) {
        let mut h = g.clone();
        for (i, lvl) in self.levels.iter().enumerate().skip(start) {
            let beta = h.apply(lvl.base_point);
            match &lvl.transversal[beta] {
                Some(u) => h = h.then(&u.inverse()),
                None => return (i, h),
            }
        }
        (self.levels.len(), h)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn levels(&self) -> &[BsgsLevel] {
        &self.levels
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    /// All strong generators, level by level, without repeats.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for lvl in &self.levels {
            for g in &lvl.generators {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Product of the basic orbit lengths.
    pub fn order(&self) -> u64 {
        self.levels
            .iter()
            .map(|l| l.orbit.len() as u64)
            .try_fold(1u64, |acc, n| acc.checked_mul(n))
            .expect("group order overflows u64")
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        g.degree() == self.degree && self.sift(g).1.is_identity()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(degree: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(degree, cycles).unwrap()
    }

    #[test]
    fn symmetric_three() {
        let b = Bsgs::build(3, &[cyc(3, &[&[0, 1]]), cyc(3, &[&[0, 1, 2]])]);
        assert_eq!(b.order(), 6);
        assert_eq!(b.base(), vec![0, 1]);
    }

    #[test]
    fn trivial_group_has_empty_chain() {
        let b = Bsgs::build(4, &[Permutation::identity(4)]);
        assert_eq!(b.order(), 1);
        assert!(b.base().is_empty());
    }

    #[test]
    fn orbit_lengths_multiply_to_order() {
        // S6
        let gens = [cyc(6, &[&[0, 1]]), cyc(6, &[&[0, 1, 2, 3, 4, 5]])];
        let b = Bsgs::build(6, &gens);
        assert_eq!(b.basic_orbit_lengths(), vec![6, 5, 4, 3, 2]);
        assert_eq!(b.order(), 720);
        for g in &gens {
            assert!(b.contains(g));
        }
    }

    #[test]
    fn residue_of_non_member() {
        let b = Bsgs::build(3, &[cyc(3, &[&[0, 1, 2]])]);
        assert!(!b.contains(&cyc(3, &[&[0, 1]])));
    }
}
