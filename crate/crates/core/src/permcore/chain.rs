//! Stabilizer chains (deterministic Schreier–Sims).
//!
//! Used for group orders, membership and coset canonical forms when the
//! group is too large to enumerate.

use super::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[x]` maps the base point to `x`.
    transversal: Vec<Option<Permutation>>,
    inv_transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(base: usize, degree: usize) -> Self {
        Level {
            base,
            gens: Vec::new(),
            orbit: Vec::new(),
            transversal: vec![None; degree],
            inv_transversal: vec![None; degree],
        }
    }

    fn rebuild_orbit(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.inv_transversal = vec![None; degree];
        self.orbit.clear();
        let id = Permutation::identity(degree);
        self.transversal[self.base] = Some(id.clone());
        self.inv_transversal[self.base] = Some(id);
        self.orbit.push(self.base);
        let mut i = 0;
        while i < self.orbit.len() {
            let x = self.orbit[i];
            i += 1;
            for g in &self.gens {
                let y = g.image(x);
                if self.transversal[y].is_none() {
                    let u = self.transversal[x].as_ref().unwrap().then(g);
                    self.inv_transversal[y] = Some(u.inverse());
                    self.transversal[y] = Some(u);
                    self.orbit.push(y);
                }
            }
        }
    }
}

/// A base and strong generating set with explicit transversals.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    pub fn new(degree: usize, gens: &[Permutation]) -> StabChain {
        Self::with_base_priority(degree, gens, None)
    }

    /// New base points are the first moved point in `priority` order
    /// (natural order when absent).
    pub fn with_base_priority(degree: usize, gens: &[Permutation], priority: Option<&[usize]>) -> StabChain {
        let natural: Vec<usize>;
        let order = match priority {
            Some(p) => p,
            None => {
                natural = (0..degree).collect();
                &natural
            }
        };
        let first_moved = |g: &Permutation| order.iter().copied().find(|&x| g.image(x) != x);

        let mut gens: Vec<Permutation> = gens.iter().filter(|g| !g.is_identity()).cloned().collect();
        gens.dedup();
        let mut chain = StabChain { degree, levels: Vec::new() };
        if gens.is_empty() {
            return chain;
        }

        let mut base: Vec<usize> = Vec::new();
        for g in &gens {
            if base.iter().all(|&b| g.image(b) == b) {
                base.push(first_moved(g).unwrap());
            }
        }
        for (i, &b) in base.iter().enumerate() {
            let mut level = Level::new(b, degree);
            level.gens = gens.iter().filter(|g| base[..i].iter().all(|&c| g.image(c) == c)).cloned().collect();
            level.rebuild_orbit(degree);
            chain.levels.push(level);
        }

        let mut i = chain.levels.len() as isize - 1;
        while i >= 0 {
            let li = i as usize;
            let mut jumped = None;
            'scan: for oi in 0..chain.levels[li].orbit.len() {
                let beta = chain.levels[li].orbit[oi];
                for gi in 0..chain.levels[li].gens.len() {
                    let level = &chain.levels[li];
                    let g = &level.gens[gi];
                    let gb = g.image(beta);
                    let ub_g = level.transversal[beta].as_ref().unwrap().then(g);
                    if Some(&ub_g) == level.transversal[gb].as_ref() {
                        continue;
                    }
                    let schreier = ub_g.then(level.inv_transversal[gb].as_ref().unwrap());
                    let (h, j) = chain.strip_from(schreier, li + 1);
                    let target = if j < chain.levels.len() {
                        j
                    } else if !h.is_identity() {
                        let b = first_moved(&h).unwrap();
                        chain.levels.push(Level::new(b, degree));
                        chain.levels.len() - 1
                    } else {
                        continue;
                    };
                    for l in li + 1..=target {
                        chain.levels[l].gens.push(h.clone());
                        chain.levels[l].rebuild_orbit(degree);
                    }
                    jumped = Some(target);
                    break 'scan;
                }
            }
            match jumped {
                Some(t) => i = t as isize,
                None => i -= 1,
            }
        }
        chain
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn orbit_sizes(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    /// Strong generators of the top level.
    pub fn strong_generators(&self) -> &[Permutation] {
        self.levels.first().map(|l| l.gens.as_slice()).unwrap_or(&[])
    }

    /// Sifts `g` from level `start`; returns the residue and the level where it stopped.
    fn strip_from(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            let b = g.image(level.base);
            match &level.inv_transversal[b] {
                Some(u) => g = g.then(u),
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, j) = self.strip_from(g.clone(), 0);
        j == self.levels.len() && h.is_identity()
    }

    /// Sifts `g` through the chain. The flag is false when some base image
    /// fell outside its orbit.
    pub fn sift(&self, g: &Permutation) -> (Permutation, bool) {
        let (h, j) = self.strip_from(g.clone(), 0);
        let complete = j == self.levels.len();
        (h, complete)
    }

    /// Canonical representative of the right coset `H·g` where `H` is this group:
    /// the element whose base images are lexicographically least.
    pub fn coset_canonical(&self, g: &Permutation) -> Permutation {
        let mut g = g.clone();
        for level in &self.levels {
            let gamma = *level.orbit.iter().min_by_key(|&&x| g.image(x)).unwrap();
            if gamma != level.base {
                g = level.transversal[gamma].as_ref().unwrap().then(&g);
            }
        }
        g
    }
}
