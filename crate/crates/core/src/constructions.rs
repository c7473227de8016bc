//! Explicit models: polygons, simplices, and the cubic toroids
//! `{4,3,…,3,4}_(s,0,…,0)` with vertex set `(Z/s)^n`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::lattice::{FaceLattice, Flag};
use crate::permcore::Permutation;
use crate::sggi::{check_string, Sggi};

/// The `p`-gon acting on its vertices `1..p`; vertex 1 and edge `{1, 2}` are the base.
pub fn polygon(p: usize) -> Result<Sggi> {
    if p < 3 {
        return Err(Error::BadParameter(format!("polygon needs p >= 3, got {p}")));
    }
    let r0 = Permutation::from_images((0..p).map(|x| (p + 1 - x) % p).collect())?;
    let r1 = Permutation::from_images((0..p).map(|x| (p - x) % p).collect())?;
    check_string(vec![r0, r1])
}

/// `(ρ0ρ1)^((p-1)/2) ρ0`.
pub fn polygon_dualizing_word(p: usize) -> Vec<usize> {
    let mut w: Vec<usize> = std::iter::repeat_n([0, 1], (p - 1) / 2).flatten().collect();
    w.push(0);
    w
}

/// `S_{n+1}` on `n + 1` points with `ρ_i = (i+1, i+2)`.
pub fn simplex(n: usize) -> Result<Sggi> {
    if n < 1 {
        return Err(Error::BadParameter("simplex needs n >= 1".into()));
    }
    let gens = (0..n).map(|i| Permutation::transposition(n + 1, i + 1, i + 2)).collect::<Result<_>>()?;
    check_string(gens)
}

/// `(ρ0⋯ρ_{n-1})(ρ0⋯ρ_{n-2})⋯(ρ0)`, which bubble-sorts the points into reverse order.
pub fn simplex_dualizing_word(n: usize) -> Vec<usize> {
    (1..=n).rev().flat_map(|m| 0..m).collect()
}

/// The 1-polytope.
pub fn edge() -> Sggi {
    check_string(vec![Permutation::transposition(2, 1, 2).unwrap()]).unwrap()
}

/// The tetrahedron with vertices `1..4`, edges `a..f` and facets `L, D, F, R`,
/// acting on vertices by `ρ0 = (1,2)`, `ρ1 = (2,4)`, `ρ2 = (3,4)`.
pub struct LabeledTetrahedron;

impl LabeledTetrahedron {
    const EDGES: [(char, [usize; 2]); 6] =
        [('a', [1, 2]), ('b', [1, 3]), ('c', [1, 4]), ('d', [2, 3]), ('e', [2, 4]), ('f', [3, 4])];
    const FACETS: [(char, [usize; 3]); 4] = [('L', [1, 2, 4]), ('D', [1, 2, 3]), ('F', [1, 3, 4]), ('R', [2, 3, 4])];

    pub fn sggi() -> Sggi {
        let g = |a, b| Permutation::transposition(4, a, b).unwrap();
        check_string(vec![g(1, 2), g(2, 4), g(3, 4)]).unwrap()
    }

    /// Label of a face from its vertex set: the vertex itself, an edge
    /// letter or a facet letter.
    pub fn label(vertices: &BTreeSet<usize>) -> Option<String> {
        let v: Vec<usize> = vertices.iter().copied().collect();
        match v.len() {
            1 => Some(v[0].to_string()),
            2 => Self::EDGES.iter().find(|(_, s)| s[..] == v[..]).map(|(c, _)| c.to_string()),
            3 => Self::FACETS.iter().find(|(_, s)| s[..] == v[..]).map(|(c, _)| c.to_string()),
            _ => None,
        }
    }

    /// Labels of the vertex, edge and facet of a flag of the lattice of [`Self::sggi`].
    pub fn flag_labels(l: &FaceLattice, f: &Flag) -> Vec<String> {
        let points = l.vertex_points(0).expect("vertex 1 is fixed by the vertex stabilizer");
        (0..3)
            .map(|i| {
                let v = l.vertex_set(i, f.faces[i]).iter().map(|&x| points[x] + 1).collect();
                Self::label(&v).unwrap_or_default()
            })
            .collect()
    }
}

/// Cubic toroid `{4,3^{n-2},4}_(s,0^{n-1})`.
///
/// The group is realized on darts `(x, ±e_j)` (a vertex with an edge
/// direction), which is faithful for every `s ≥ 2`. Dart `(x, d)` is point
/// `vertex_index(x) * 2n + dir_index(d) + 1` where `vertex_index` reads `x`
/// in base `s` with the first coordinate least significant and
/// `dir_index(+e_j) = 2j`, `dir_index(-e_j) = 2j + 1` (`j` from 0).
#[derive(Debug, Clone)]
pub struct ToroidModel {
    pub n: usize,
    pub s: usize,
    pub sggi: Sggi,
}

/// One generator as an affine map `x ↦ x·A + b` where `A` is a signed
/// permutation matrix: coordinate `j` of the image is `sign[j] * x[src[j]] + b[j]`.
struct Affine {
    src: Vec<usize>,
    sign: Vec<i64>,
    shift: Vec<i64>,
}

impl Affine {
    fn identity(n: usize) -> Affine {
        Affine { src: (0..n).collect(), sign: vec![1; n], shift: vec![0; n] }
    }

    fn apply(&self, x: &[i64], s: i64) -> Vec<i64> {
        (0..x.len()).map(|j| (self.sign[j] * x[self.src[j]] + self.shift[j]).rem_euclid(s)).collect()
    }

    /// Linear part on a direction `±e_k`, encoded as `(k, sign)`.
    fn apply_dir(&self, k: usize, sign: i64) -> (usize, i64) {
        let j = self.src.iter().position(|&c| c == k).unwrap();
        (j, sign * self.sign[j])
    }
}

impl ToroidModel {
    pub fn new(n: usize, s: usize) -> Result<ToroidModel> {
        if n < 2 || s < 2 {
            return Err(Error::BadParameter(format!("toroid needs n >= 2 and s >= 2, got n={n}, s={s}")));
        }
        let mut maps = Vec::new();
        let mut r0 = Affine::identity(n);
        r0.sign[0] = -1;
        r0.shift[0] = 1;
        maps.push(r0);
        for i in 0..n - 1 {
            let mut r = Affine::identity(n);
            r.src.swap(i, i + 1);
            maps.push(r);
        }
        let mut rn = Affine::identity(n);
        rn.sign[n - 1] = -1;
        maps.push(rn);

        let verts = s.pow(n as u32);
        let degree = verts * 2 * n;
        let mut gens = Vec::new();
        for m in &maps {
            let mut images = vec![0usize; degree];
            for v in 0..verts {
                let x = Self::coords_of(n, s, v);
                let y = m.apply(&x, s as i64);
                let w = Self::index_of(s, &y);
                for k in 0..n {
                    for (sign, off) in [(1i64, 0usize), (-1, 1)] {
                        let (k2, sign2) = m.apply_dir(k, sign);
                        let off2 = if sign2 > 0 { 0 } else { 1 };
                        images[v * 2 * n + 2 * k + off] = w * 2 * n + 2 * k2 + off2;
                    }
                }
            }
            gens.push(Permutation::from_images(images)?);
        }
        Ok(ToroidModel { n, s, sggi: check_string(gens)? })
    }

    fn coords_of(n: usize, s: usize, mut v: usize) -> Vec<i64> {
        (0..n)
            .map(|_| {
                let c = v % s;
                v /= s;
                c as i64
            })
            .collect()
    }

    fn index_of(s: usize, x: &[i64]) -> usize {
        x.iter().rev().fold(0, |acc, &c| acc * s + c.rem_euclid(s as i64) as usize)
    }

    pub fn vertex_count(&self) -> usize {
        self.s.pow(self.n as u32)
    }

    /// 1-based vertex label of coordinates.
    pub fn vertex_label(&self, x: &[i64]) -> usize {
        Self::index_of(self.s, x) + 1
    }

    /// Vertex coordinates and direction `(j, ±1)` of a 0-based dart point.
    pub fn dart(&self, point: usize) -> (Vec<i64>, (usize, i64)) {
        let v = point / (2 * self.n);
        let r = point % (2 * self.n);
        (Self::coords_of(self.n, self.s, v), (r / 2, if r.is_multiple_of(2) { 1 } else { -1 }))
    }

    /// The far end of a dart.
    pub fn dart_head(&self, point: usize) -> Vec<i64> {
        let (mut x, (j, sign)) = self.dart(point);
        x[j] = (x[j] + sign).rem_euclid(self.s as i64);
        x
    }

    /// The base flag's vertex is the origin and its edge leaves along `+e_1`
    /// (point 1). Vertex and edge of the flag moved by `g`.
    pub fn flag_vertex_and_edge(&self, g: &Permutation) -> (Vec<i64>, Vec<i64>) {
        let d = g.image(0);
        (self.dart(d).0, self.dart_head(d))
    }

    /// Generator actions on the `s^n` vertices (not faithful when `s = 2`).
    pub fn vertex_generators(&self) -> Vec<Permutation> {
        let verts = self.vertex_count();
        let darts = 2 * self.n;
        self.sggi
            .gens()
            .iter()
            .map(|g| Permutation::from_images((0..verts).map(|v| g.image(v * darts) / darts).collect()).unwrap())
            .collect()
    }
}

/// `{4,4}_(s,0)` on the torus `(Z/s)^2`.
pub fn torus44(s: usize) -> Result<ToroidModel> {
    ToroidModel::new(2, s)
}

pub fn cubic_toroid(n: usize, s: usize) -> Result<ToroidModel> {
    ToroidModel::new(n, s)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polygon_orders_and_type() {
        let t = polygon(3).unwrap();
        assert_eq!(t.order(), 6);
        let g = polygon(7).unwrap();
        assert_eq!(g.schlafli_type().0, vec![7]);
        assert!(polygon(2).is_err());
    }

    #[test]
    fn simplex_word_reverses_points() {
        for n in 1..=6 {
            let s = simplex(n).unwrap();
            let w = s.evaluate(&simplex_dualizing_word(n));
            let rev: Vec<usize> = (0..=n).rev().collect();
            assert_eq!(w, Permutation::from_images(rev).unwrap());
        }
    }

    #[test]
    fn edge_group() {
        assert_eq!(edge().order(), 2);
        assert_eq!(edge().rank(), 1);
    }

    #[test]
    fn torus_vertex_action_matches_formulas() {
        let t = torus44(5).unwrap();
        let v = t.vertex_generators();
        for x in 0..5i64 {
            for y in 0..5i64 {
                let p = t.vertex_label(&[x, y]) - 1;
                assert_eq!(v[0].image(p), t.vertex_label(&[1 - x, y]) - 1);
                assert_eq!(v[1].image(p), t.vertex_label(&[y, x]) - 1);
                assert_eq!(v[2].image(p), t.vertex_label(&[x, -y]) - 1);
            }
        }
    }

    #[test]
    fn toroid_orders() {
        for s in 2..=4usize {
            assert_eq!(torus44(s).unwrap().sggi.order(), 8 * (s * s) as u128);
        }
        assert_eq!(cubic_toroid(3, 3).unwrap().sggi.order(), 48 * 27);
        assert_eq!(cubic_toroid(3, 2).unwrap().sggi.order(), 48 * 8);
    }

    #[test]
    fn tetrahedron_labels() {
        let set = |v: &[usize]| v.iter().copied().collect::<BTreeSet<usize>>();
        assert_eq!(LabeledTetrahedron::label(&set(&[3, 4])).unwrap(), "f");
        assert_eq!(LabeledTetrahedron::label(&set(&[2, 3, 4])).unwrap(), "R");
        assert_eq!(LabeledTetrahedron::label(&set(&[3])).unwrap(), "3");
    }
}
