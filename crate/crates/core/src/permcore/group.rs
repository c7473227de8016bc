use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use super::chain::StabChain;
use super::perm::Permutation;
use crate::error::{Error, Result};

pub const DEFAULT_ELEMENT_CAP: usize = 4_000_000;

/// A permutation group given by generators. The stabilizer chain and the
/// element list are computed on demand and cached.
#[derive(Debug)]
pub struct PermGroup {
    degree: usize,
    gens: Vec<Permutation>,
    cap: usize,
    chain: OnceLock<StabChain>,
    elements: OnceLock<Vec<Permutation>>,
}

impl Clone for PermGroup {
    fn clone(&self) -> Self {
        PermGroup {
            degree: self.degree,
            gens: self.gens.clone(),
            cap: self.cap,
            chain: self.chain.clone(),
            elements: self.elements.clone(),
        }
    }
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<PermGroup> {
        for g in &gens {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch { left: degree, right: g.degree() });
            }
        }
        Ok(Self::from_parts(degree, gens, DEFAULT_ELEMENT_CAP))
    }

    pub(crate) fn from_parts(degree: usize, gens: Vec<Permutation>, cap: usize) -> PermGroup {
        PermGroup { degree, gens, cap, chain: OnceLock::new(), elements: OnceLock::new() }
    }

    pub fn trivial(degree: usize) -> PermGroup {
        Self::from_parts(degree, Vec::new(), DEFAULT_ELEMENT_CAP)
    }

    pub fn with_cap(mut self, cap: usize) -> PermGroup {
        self.cap = cap;
        self.elements = OnceLock::new();
        self
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn chain(&self) -> &StabChain {
        self.chain.get_or_init(|| StabChain::new(self.degree, &self.gens))
    }

    pub fn order(&self) -> u128 {
        self.chain().order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    /// All elements by breadth-first closure, sorted by image sequence.
    pub fn enumerate(&self) -> Result<&[Permutation]> {
        if let Some(e) = self.elements.get() {
            return Ok(e);
        }
        let elems = bfs_closure(self.degree, &self.gens, self.cap)?;
        Ok(self.elements.get_or_init(|| elems))
    }

    /// Orbits of the generators, each sorted, listed by minimum point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits_of(self.degree, &self.gens)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().len() <= 1
    }
}

fn bfs_closure(degree: usize, gens: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let id = Permutation::identity(degree);
    let mut seen: HashSet<Permutation> = HashSet::new();
    seen.insert(id.clone());
    let mut queue = vec![id];
    let mut i = 0;
    while i < queue.len() {
        let x = queue[i].clone();
        i += 1;
        for g in gens {
            let y = x.then(g);
            if !seen.contains(&y) {
                if seen.len() >= cap {
                    return Err(Error::CapExceeded { cap });
                }
                seen.insert(y.clone());
                queue.push(y);
            }
        }
    }
    queue.sort_unstable();
    Ok(queue)
}

pub(crate) fn orbits_of(degree: usize, gens: &[Permutation]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; degree];
    let mut out = Vec::new();
    for start in 0..degree {
        if seen[start] {
            continue;
        }
        seen[start] = true;
        let mut orbit = vec![start];
        let mut i = 0;
        while i < orbit.len() {
            let x = orbit[i];
            i += 1;
            for g in gens {
                let y = g.image(x);
                if !seen[y] {
                    seen[y] = true;
                    orbit.push(y);
                }
            }
        }
        orbit.sort_unstable();
        out.push(orbit);
    }
    out
}

/// Result of intersecting two subgroups via the orbit of a coset.
#[derive(Debug, Clone)]
pub struct IntersectionData {
    pub order: u128,
    /// Schreier generators of the intersection (identity removed, deduplicated).
    pub generators: Vec<Permutation>,
}

/// `A ∩ B` as the stabilizer of the coset `A` under right multiplication by `B`.
/// The orbit has at most `[⟨A,B⟩ : A]` cosets, bounded by `cap`.
pub fn intersection_data(a: &PermGroup, b: &PermGroup, cap: usize) -> Result<IntersectionData> {
    if a.degree != b.degree {
        return Err(Error::DegreeMismatch { left: a.degree, right: b.degree });
    }
    let chain = a.chain();
    let id = Permutation::identity(a.degree);
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(chain.coset_canonical(&id), 0);
    let mut reps = vec![id];
    let mut seen_gens: HashSet<Permutation> = HashSet::new();
    let mut generators = Vec::new();
    let mut i = 0;
    while i < reps.len() {
        let t = reps[i].clone();
        i += 1;
        for g in b.generators() {
            let h = t.then(g);
            let c = chain.coset_canonical(&h);
            match index.get(&c) {
                Some(&j) => {
                    let s = h.then(&reps[j].inverse());
                    if !s.is_identity() && seen_gens.insert(s.clone()) {
                        generators.push(s);
                    }
                }
                None => {
                    if reps.len() >= cap {
                        return Err(Error::CapExceeded { cap });
                    }
                    index.insert(c, reps.len());
                    reps.push(h);
                }
            }
        }
    }
    let order = b.order() / reps.len() as u128;
    Ok(IntersectionData { order, generators })
}

/// The intersection `A ∩ B`, returned with its element set cached.
pub fn subgroup_intersection(a: &PermGroup, b: &PermGroup) -> Result<PermGroup> {
    let cap = a.cap.min(b.cap);
    let data = intersection_data(a, b, cap)?;
    let gens = prune_generators(a.degree, data.generators);
    let g = PermGroup::from_parts(a.degree, gens, cap);
    g.enumerate()?;
    Ok(g)
}

/// Drops generators already in the span of earlier ones.
pub(crate) fn prune_generators(degree: usize, gens: Vec<Permutation>) -> Vec<Permutation> {
    let mut kept: Vec<Permutation> = Vec::new();
    let mut chain = StabChain::new(degree, &kept);
    for g in gens {
        if !chain.contains(&g) {
            kept.push(g);
            chain = StabChain::new(degree, &kept);
        }
    }
    kept
}

/// `[a, b] = a⁻¹ b⁻¹ a b`.
pub fn commutator(a: &Permutation, b: &Permutation) -> Permutation {
    a.inverse().then(&b.inverse()).then(a).then(b)
}

/// Derived subgroup as the normal closure of generator commutators.
pub fn derived_subgroup(g: &PermGroup) -> PermGroup {
    let mut seeds = Vec::new();
    for (i, a) in g.gens.iter().enumerate() {
        for b in &g.gens[i + 1..] {
            seeds.push(commutator(a, b));
        }
    }
    normal_closure(g, &seeds)
}

/// Smallest normal subgroup of `g` containing `seeds`.
pub fn normal_closure(g: &PermGroup, seeds: &[Permutation]) -> PermGroup {
    let mut gens: Vec<Permutation> = Vec::new();
    let mut chain = StabChain::new(g.degree, &gens);
    let mut queue = Vec::new();
    for c in seeds {
        if !chain.contains(c) {
            gens.push(c.clone());
            chain = StabChain::new(g.degree, &gens);
            queue.push(c.clone());
        }
    }
    while let Some(h) = queue.pop() {
        for x in &g.gens {
            let c = h.conjugate_by(x);
            if !chain.contains(&c) {
                gens.push(c.clone());
                chain = StabChain::new(g.degree, &gens);
                queue.push(c);
            }
        }
    }
    let d = PermGroup::from_parts(g.degree, gens, g.cap);
    let _ = d.chain.set(chain);
    d
}

pub fn in_derived_subgroup(g: &PermGroup, x: &Permutation) -> bool {
    derived_subgroup(g).contains(x)
}

/// The center, by backtracking over the centralizer of the generators.
pub fn center(g: &PermGroup) -> Result<PermGroup> {
    let elems = super::search::conjugators(g, &g.gens, &g.gens, false)?;
    let gens = prune_generators(g.degree, elems.iter().filter(|e| !e.is_identity()).cloned().collect());
    let z = PermGroup::from_parts(g.degree, gens, g.cap);
    let _ = z.elements.set(elems);
    Ok(z)
}

/// Center by filtering the full element list. Oracle for [`center`].
pub fn center_exhaustive(g: &PermGroup) -> Result<Vec<Permutation>> {
    Ok(g.enumerate()?.iter().filter(|e| g.gens.iter().all(|x| x.commutes_with(e))).cloned().collect())
}
