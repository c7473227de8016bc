//! Face lattices of string C-groups built from cosets of the maximal
//! parabolic subgroups, with flags identified with group elements.
//!
//! The flag of `g` is the base flag moved by `g`, so its `i`-face is the
//! coset `Γ_i g` and its `i`-adjacent flag is the flag of `ρ_i g`. Faces of
//! rank `i` are numbered by the least element of their coset.

use std::collections::{BTreeSet, HashMap, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::permcore::Permutation;
use crate::sggi::Sggi;

/// One face per rank `0..n`; the least and greatest faces are implicit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Flag {
    pub faces: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct FaceLattice {
    sggi: Sggi,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    flag_faces: Vec<Vec<usize>>,
    by_faces: HashMap<Vec<usize>, usize>,
    /// `face_rep[i][a]`: least element whose flag has `a` as its `i`-face.
    face_rep: Vec<Vec<usize>>,
    vertices: Vec<Vec<BTreeSet<usize>>>,
    /// `up[i][a]`: the `(i+1)`-faces incident to `a`, ascending.
    up: Vec<Vec<Vec<usize>>>,
    incidence: HashSet<(usize, usize, usize, usize)>,
}

#[derive(Serialize)]
struct LatticeJson<'a> {
    rank: usize,
    faces: Vec<Vec<&'a BTreeSet<usize>>>,
    flags: Vec<&'a Vec<usize>>,
}

impl FaceLattice {
    pub fn build(p: &Sggi, require_c: bool) -> Result<FaceLattice> {
        if require_c && !p.is_string_c_group()? {
            return Err(Error::NotStringCGroup);
        }
        let n = p.rank();
        let elements = p.group().enumerate()?.to_vec();
        let index: HashMap<Permutation, usize> = elements.iter().enumerate().map(|(i, g)| (g.clone(), i)).collect();

        let chains: Vec<_> = (0..n).map(|i| p.parabolic(&[i])).collect();
        let mut keys: Vec<HashMap<Permutation, usize>> = vec![HashMap::new(); n];
        let mut face_rep: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut flag_faces = Vec::with_capacity(elements.len());
        for (e, g) in elements.iter().enumerate() {
            let mut faces = Vec::with_capacity(n);
            for i in 0..n {
                let key = chains[i].chain().coset_canonical(g);
                let next = keys[i].len();
                let a = *keys[i].entry(key).or_insert(next);
                if a == next {
                    face_rep[i].push(e);
                }
                faces.push(a);
            }
            flag_faces.push(faces);
        }

        let mut vertices: Vec<Vec<BTreeSet<usize>>> = face_rep.iter().map(|r| vec![BTreeSet::new(); r.len()]).collect();
        let mut up: Vec<Vec<BTreeSet<usize>>> = face_rep.iter().map(|r| vec![BTreeSet::new(); r.len()]).collect();
        let mut incidence = HashSet::new();
        for f in &flag_faces {
            for i in 0..n {
                vertices[i][f[i]].insert(f[0]);
                if i + 1 < n {
                    up[i][f[i]].insert(f[i + 1]);
                }
                for j in i + 1..n {
                    incidence.insert((i, f[i], j, f[j]));
                }
            }
        }
        let by_faces = flag_faces.iter().enumerate().map(|(e, f)| (f.clone(), e)).collect();
        let up = up.into_iter().map(|r| r.into_iter().map(|s| s.into_iter().collect()).collect()).collect();
        Ok(FaceLattice { sggi: p.clone(), elements, index, flag_faces, by_faces, face_rep, vertices, up, incidence })
    }

    pub fn sggi(&self) -> &Sggi {
        &self.sggi
    }

    pub fn rank(&self) -> usize {
        self.sggi.rank()
    }

    pub fn face_count(&self, rank: usize) -> usize {
        self.face_rep[rank].len()
    }

    pub fn flag_count(&self) -> usize {
        self.elements.len()
    }

    pub fn base_flag(&self) -> Flag {
        self.flag_of(&Permutation::identity(self.sggi.degree())).unwrap()
    }

    pub fn flags(&self) -> impl Iterator<Item = Flag> + '_ {
        self.flag_faces.iter().map(|f| Flag { faces: f.clone() })
    }

    /// The flag `Φg`.
    pub fn flag_of(&self, g: &Permutation) -> Option<Flag> {
        self.index.get(g).map(|&e| Flag { faces: self.flag_faces[e].clone() })
    }

    /// The element carrying the base flag to `f`.
    pub fn element_of(&self, f: &Flag) -> Option<&Permutation> {
        self.by_faces.get(&f.faces).map(|&e| &self.elements[e])
    }

    pub fn flag_adjacent(&self, f: &Flag, i: usize) -> Flag {
        let g = self.element_of(f).expect("flag of this lattice");
        self.flag_of(&self.sggi.gen(i).then(g)).unwrap()
    }

    /// Whether the `i`-face `a` and the `j`-face `b` are incident.
    pub fn incident(&self, i: usize, a: usize, j: usize, b: usize) -> bool {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.incidence.contains(&(i, a, j, b)),
            std::cmp::Ordering::Greater => self.incidence.contains(&(j, b, i, a)),
            std::cmp::Ordering::Equal => a == b,
        }
    }

    pub fn vertex_set(&self, rank: usize, face: usize) -> &BTreeSet<usize> {
        &self.vertices[rank][face]
    }

    /// The image of face `a` of rank `i` under `φ`.
    pub fn face_image(&self, i: usize, a: usize, phi: &Permutation) -> usize {
        let g = &self.elements[self.face_rep[i][a]];
        self.flag_faces[self.index[&g.then(phi)]][i]
    }

    /// Every vertex lies on every facet.
    pub fn is_flat(&self) -> bool {
        let n = self.rank();
        self.face_count(0) * self.face_count(n - 1) == self.vertices[n - 1].iter().map(|v| v.len()).sum::<usize>()
    }

    /// No two distinct proper faces have the same vertex set.
    pub fn is_vertex_describable(&self) -> bool {
        let mut seen = HashSet::new();
        self.vertices.iter().flatten().all(|v| seen.insert(v))
    }

    /// For each vertex, the point `x0 g` where `g` carries the base vertex to it.
    /// `None` when this is not well defined, i.e. `Γ_0` does not fix `x0`.
    pub fn vertex_points(&self, x0: usize) -> Option<Vec<usize>> {
        let mut out = vec![usize::MAX; self.face_count(0)];
        for (g, f) in self.elements.iter().zip(&self.flag_faces) {
            let x = g.image(x0);
            if out[f[0]] == usize::MAX {
                out[f[0]] = x;
            } else if out[f[0]] != x {
                return None;
            }
        }
        Some(out)
    }

    /// `F⟨ρ_j | j ∈ gens⟩` for the `i`-face `a`.
    fn face_orbit(&self, i: usize, a: usize, gens: std::ops::Range<usize>) -> Vec<usize> {
        let mut orbit = vec![a];
        let mut k = 0;
        while k < orbit.len() {
            let b = orbit[k];
            k += 1;
            for j in gens.clone() {
                let c = self.face_image(i, b, self.sggi.gen(j));
                if !orbit.contains(&c) {
                    orbit.push(c);
                }
            }
        }
        orbit
    }

    /// Searches for a flag dual to the base flag: a vertex fixed by
    /// `⟨ρ_0..ρ_{n-2}⟩`, then each `F_{i+1}` incident to all of
    /// `F_i⟨ρ_{n-i-1}..ρ_{n-1}⟩`. Candidates are tried in index order and
    /// every completed chain is verified, so `None` means no dual flag exists.
    pub fn dual_flag_search(&self) -> Option<Flag> {
        let n = self.rank();
        let starts =
            (0..self.face_count(0)).filter(|&a| (0..n - 1).all(|j| self.face_image(0, a, self.sggi.gen(j)) == a));
        let mut faces = Vec::with_capacity(n);
        for a in starts {
            faces.push(a);
            if let Some(f) = self.extend(&mut faces) {
                return Some(f);
            }
            faces.pop();
        }
        None
    }

    fn extend(&self, faces: &mut Vec<usize>) -> Option<Flag> {
        let n = self.rank();
        let i = faces.len() - 1;
        if i == n - 1 {
            let f = Flag { faces: faces.clone() };
            return self.is_dual_to_base(&f).then_some(f);
        }
        let orbit = self.face_orbit(i, faces[i], n - i - 1..n);
        let candidates: Vec<usize> = self.up[i][faces[i]]
            .iter()
            .copied()
            .filter(|&b| orbit.iter().all(|&o| self.incident(i, o, i + 1, b)))
            .collect();
        for b in candidates {
            faces.push(b);
            if let Some(f) = self.extend(faces) {
                return Some(f);
            }
            faces.pop();
        }
        None
    }

    fn is_dual_to_base(&self, psi: &Flag) -> bool {
        match self.element_of(psi) {
            Some(b) => {
                let n = self.rank();
                (0..n).all(|i| b.then(self.sggi.gen(i)) == self.sggi.gen(n - 1 - i).then(b))
            }
            None => false,
        }
    }

    /// Whether `Ψ` is dual to `Φ`: `Ψφ_i = Ψ^{n-1-i}` where `Φφ_i = Φ^i`, plus
    /// the same identity for each sampled word `w`, with `Φφ = Φ^w ⇒ Ψφ = Ψ^{w*}`.
    pub fn verify_dual_flag(&self, phi: &Flag, psi: &Flag, sample: &[Vec<usize>]) -> bool {
        let (Some(a), Some(b)) = (self.element_of(phi), self.element_of(psi)) else {
            return false;
        };
        let n = self.rank();
        let a_inv = a.inverse();
        let check = |w: &[usize]| {
            // Φ^w is the flag of ρ_{w_k}⋯ρ_{w_1} a.
            let rev = self.sggi.evaluate(&w.iter().rev().copied().collect::<Vec<_>>());
            let phi_w = a_inv.then(&rev).then(a);
            let star: Vec<usize> = w.iter().rev().map(|&i| n - 1 - i).collect();
            b.then(&phi_w) == self.sggi.evaluate(&star).then(b)
        };
        (0..n).all(|i| check(&[i])) && sample.iter().all(|w| check(w))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let j = LatticeJson {
            rank: self.rank(),
            faces: self.vertices.iter().map(|r| r.iter().collect()).collect(),
            flags: self.flag_faces.iter().collect(),
        };
        serde_json::to_value(j).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{polygon, simplex, LabeledTetrahedron};

    #[test]
    fn simplex_counts() {
        let l = FaceLattice::build(&simplex(3).unwrap(), true).unwrap();
        assert_eq!((l.face_count(0), l.face_count(1), l.face_count(2)), (4, 6, 4));
        assert_eq!(l.flag_count(), 24);
        assert!(!l.is_flat());
        assert!(l.is_vertex_describable());
    }

    #[test]
    fn pentagon_counts() {
        let l = FaceLattice::build(&polygon(5).unwrap(), true).unwrap();
        assert_eq!((l.face_count(0), l.face_count(1)), (5, 5));
    }

    #[test]
    fn adjacency_is_involutive() {
        let l = FaceLattice::build(&simplex(3).unwrap(), true).unwrap();
        for f in l.flags() {
            for i in 0..3 {
                assert_eq!(l.flag_adjacent(&l.flag_adjacent(&f, i), i), f);
                let g = l.flag_adjacent(&f, i);
                let differing: Vec<usize> = (0..3).filter(|&k| g.faces[k] != f.faces[k]).collect();
                assert_eq!(differing, vec![i]);
            }
        }
    }

    #[test]
    fn tetrahedron_dual_flag() {
        let l = FaceLattice::build(&LabeledTetrahedron::sggi(), true).unwrap();
        let base = l.base_flag();
        assert_eq!(LabeledTetrahedron::flag_labels(&l, &base), ["1", "a", "L"]);
        let psi = l.dual_flag_search().unwrap();
        assert_eq!(LabeledTetrahedron::flag_labels(&l, &psi), ["3", "f", "R"]);
        assert!(l.verify_dual_flag(&base, &psi, &[vec![0, 1], vec![2, 1, 0, 1]]));
        assert!(!l.verify_dual_flag(&base, &base, &[]));
    }

    #[test]
    fn square_has_no_dual_flag() {
        let l = FaceLattice::build(&polygon(4).unwrap(), true).unwrap();
        assert!(l.dual_flag_search().is_none());
    }

    #[test]
    fn rejects_non_c_groups() {
        let g = Permutation::transposition(3, 1, 2).unwrap();
        let h = Permutation::transposition(3, 2, 3).unwrap();
        let s = crate::sggi::check_string(vec![g.clone(), h, g]).unwrap();
        assert_eq!(FaceLattice::build(&s, true).unwrap_err(), Error::NotStringCGroup);
    }
}
