//! Simultaneous conjugacy: find `g ∈ G` with `g⁻¹ x_i g = y_i` for all `i`.
//!
//! The condition says `g` maps the edge-coloured graph of the `x_i` onto the
//! graph of the `y_i`. Each connected component of the `x` graph is fixed
//! by the image of its least point, so the search branches once per
//! component, tries images in increasing order and keeps only leaves that
//! lie in `G`. Leaves come out in lexicographic order of image sequences.

use super::group::{orbits_of, PermGroup};
use super::perm::Permutation;
use crate::error::{Error, Result};

struct Search<'a> {
    group: &'a PermGroup,
    xs: &'a [Permutation],
    ys: &'a [Permutation],
    xs_inv: Vec<Permutation>,
    ys_inv: Vec<Permutation>,
    /// Components of the `x` graph, by least point.
    components: Vec<Vec<usize>>,
    /// Candidate images of each component's least point.
    candidates: Vec<Vec<usize>>,
    assign: Vec<u32>,
    used: Vec<bool>,
    first_only: bool,
    found: Vec<Permutation>,
    visits: usize,
}

const UNSET: u32 = u32::MAX;

impl Search<'_> {
    fn propagate(&mut self, from: usize, to: usize, trail: &mut Vec<usize>) -> bool {
        self.assign[from] = to as u32;
        self.used[to] = true;
        trail.push(from);
        let mut k = trail.len() - 1;
        while k < trail.len() {
            let p = trail[k];
            k += 1;
            let q = self.assign[p] as usize;
            for i in 0..self.xs.len() {
                for (x, y) in [(&self.xs[i], &self.ys[i]), (&self.xs_inv[i], &self.ys_inv[i])] {
                    let p2 = x.image(p);
                    let q2 = y.image(q);
                    let cur = self.assign[p2];
                    if cur == UNSET {
                        if self.used[q2] {
                            return false;
                        }
                        self.assign[p2] = q2 as u32;
                        self.used[q2] = true;
                        trail.push(p2);
                    } else if cur as usize != q2 {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn undo(&mut self, trail: &[usize]) {
        for &p in trail {
            self.used[self.assign[p] as usize] = false;
            self.assign[p] = UNSET;
        }
    }

    fn run(&mut self, depth: usize) -> Result<bool> {
        self.visits += 1;
        if self.visits > self.group.cap() {
            return Err(Error::CapExceeded { cap: self.group.cap() });
        }
        if depth == self.components.len() {
            let g = Permutation::from_raw(self.assign.clone());
            if self.group.contains(&g) {
                self.found.push(g);
                return Ok(self.first_only);
            }
            return Ok(false);
        }
        let start = self.components[depth][0];
        let cands = self.candidates[depth].clone();
        for q in cands {
            if self.used[q] {
                continue;
            }
            let mut trail = Vec::new();
            let ok = self.propagate(start, q, &mut trail);
            if ok && self.run(depth + 1)? {
                return Ok(true);
            }
            self.undo(&trail);
        }
        Ok(false)
    }
}

/// All (or the first) conjugating elements, in lexicographic order.
pub fn conjugators(
    group: &PermGroup,
    xs: &[Permutation],
    ys: &[Permutation],
    first_only: bool,
) -> Result<Vec<Permutation>> {
    let n = group.degree();
    if xs.len() != ys.len() {
        return Err(Error::BadParameter("xs and ys differ in length".into()));
    }
    for g in xs.iter().chain(ys) {
        if g.degree() != n {
            return Err(Error::DegreeMismatch { left: n, right: g.degree() });
        }
    }
    let components = orbits_of(n, xs);
    let g_orbit_of = {
        let mut id = vec![0usize; n];
        let orbits = group.orbits();
        for (k, o) in orbits.iter().enumerate() {
            for &x in o {
                id[x] = k;
            }
        }
        (id, orbits)
    };
    // The image of an x component is a y component of the same size.
    let mut y_size = vec![0usize; n];
    for c in orbits_of(n, ys) {
        for &x in &c {
            y_size[x] = c.len();
        }
    }
    let candidates = components
        .iter()
        .map(|c| {
            let orbit = &g_orbit_of.1[g_orbit_of.0[c[0]]];
            orbit.iter().copied().filter(|&q| y_size[q] == c.len()).collect()
        })
        .collect();
    let mut s = Search {
        group,
        xs,
        ys,
        xs_inv: xs.iter().map(|x| x.inverse()).collect(),
        ys_inv: ys.iter().map(|y| y.inverse()).collect(),
        components,
        candidates,
        assign: vec![UNSET; n],
        used: vec![false; n],
        first_only,
        found: Vec::new(),
        visits: 0,
    };
    s.run(0)?;
    Ok(s.found)
}

/// The lexicographically least conjugating element of `G`, if any.
pub fn conjugator_search(group: &PermGroup, xs: &[Permutation], ys: &[Permutation]) -> Result<Option<Permutation>> {
    Ok(conjugators(group, xs, ys, true)?.into_iter().next())
}

/// Reference scan over the element list. Oracle for [`conjugators`].
pub fn conjugators_exhaustive(group: &PermGroup, xs: &[Permutation], ys: &[Permutation]) -> Result<Vec<Permutation>> {
    Ok(group.enumerate()?.iter().filter(|g| xs.iter().zip(ys).all(|(x, y)| &x.conjugate_by(g) == y)).cloned().collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_with_degree(s, n).unwrap()
    }

    #[test]
    fn identity_when_xs_equal_ys() {
        let g = PermGroup::new(4, vec![p("(1,2)", 4), p("(2,4)", 4), p("(3,4)", 4)]).unwrap();
        let gens = g.generators().to_vec();
        let c = conjugator_search(&g, &gens, &gens).unwrap().unwrap();
        assert!(c.is_identity());
    }

    #[test]
    fn reversal_in_simplex() {
        let g = PermGroup::new(4, vec![p("(1,2)", 4), p("(2,3)", 4), p("(3,4)", 4)]).unwrap();
        let xs = g.generators().to_vec();
        let ys: Vec<_> = xs.iter().rev().cloned().collect();
        let all = conjugators(&g, &xs, &ys, false).unwrap();
        assert_eq!(all, vec![p("(1,4)(2,3)", 4)]);
        assert_eq!(all, conjugators_exhaustive(&g, &xs, &ys).unwrap());
    }

    #[test]
    fn nothing_outside_group() {
        // (1,2) and (3,4) are conjugate in S4 but not inside the Klein group.
        let g = PermGroup::new(4, vec![p("(1,2)", 4), p("(3,4)", 4)]).unwrap();
        let r = conjugator_search(&g, &[p("(1,2)", 4)], &[p("(3,4)", 4)]).unwrap();
        assert!(r.is_none());
    }
}
