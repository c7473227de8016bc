//! Mixes of string groups on the disjoint union of their point sets, and
//! the constructions built from mixing with an edge.

use crate::duality::{classify, dual, dualizing_set, satisfies_dualizing, DualityClass};
use crate::error::{Error, Result};
use crate::fpgroup::{comix_presentation, todd_coxeter, Presentation};
use crate::permcore::Permutation;
use crate::sggi::{check_string, covering_image, Sggi};

/// `P ⋄ Q` with the points of `P` first.
#[derive(Debug, Clone)]
pub struct MixedSggi {
    pub sggi: Sggi,
    pub left_degree: usize,
}

impl MixedSggi {
    pub fn left(&self) -> Sggi {
        self.project(0, self.left_degree)
    }

    pub fn right(&self) -> Sggi {
        self.project(self.left_degree, self.sggi.degree() - self.left_degree)
    }

    fn project(&self, offset: usize, len: usize) -> Sggi {
        let gens = self.sggi.gens().iter().map(|g| g.restrict(offset, len)).collect();
        check_string(gens).expect("projection of a mix is a factor").with_cap(self.sggi.cap())
    }
}

pub fn mix(p: &Sggi, q: &Sggi) -> Result<MixedSggi> {
    if p.rank() != q.rank() {
        return Err(Error::RankMismatch { left: p.rank(), right: q.rank() });
    }
    let gens = p.gens().iter().zip(q.gens()).map(|(a, b)| a.disjoint_sum(b)).collect();
    let sggi = check_string(gens)?.with_cap(p.cap().min(q.cap()));
    Ok(MixedSggi { sggi, left_degree: p.degree() })
}

/// `P ⋄ e` with the edge's involution on generator `position` (0 or n-1).
pub fn mix_edge(p: &Sggi, position: usize) -> Result<Sggi> {
    let n = p.rank();
    if position != 0 && position != n - 1 {
        return Err(Error::BadParameter(format!("edge position must be 0 or {}, got {position}", n - 1)));
    }
    let swap = Permutation::transposition(2, 1, 2)?;
    let id = Permutation::identity(2);
    let gens =
        p.gens().iter().enumerate().map(|(i, g)| g.disjoint_sum(if i == position { &swap } else { &id })).collect();
    Ok(check_string(gens)?.with_cap(p.cap()))
}

/// `(P ⋄ e)* ⋄ e`.
pub fn int_to_ext(p: &Sggi) -> Result<Sggi> {
    if !classify(p)?.is_internal() {
        return Err(Error::NotInternallySelfDual);
    }
    mix_edge(&dual(&mix_edge(p, 0)?), 0)
}

/// Whether `P ⋄ Q` is internally self-dual, after checking it is polytopal.
pub fn mix_internally_self_dual(p: &Sggi, q: &Sggi) -> Result<bool> {
    let m = mix(p, q)?;
    if !m.sggi.is_string_c_group()? {
        return Err(Error::NotPolytopal);
    }
    Ok(classify(&m.sggi)?.is_internal())
}

/// Whether `word` is dualizing in both `P` and `Q`.
pub fn shares_dualizing_word(p: &Sggi, q: &Sggi, word: &[usize]) -> bool {
    satisfies_dualizing(p, &p.evaluate(word)) && satisfies_dualizing(q, &q.evaluate(word))
}

/// The comix criterion: both factors internally self-dual, with dualizing
/// elements whose images agree in the comix of the given presentations.
/// `pres_p` and `pres_q` must present `Γ(P)` and `Γ(Q)` on the same generators.
pub fn comix_criterion(
    p: &Sggi,
    q: &Sggi,
    pres_p: &Presentation,
    pres_q: &Presentation,
    coset_cap: usize,
) -> Result<bool> {
    let (DualityClass::InternallySelfDual(_), DualityClass::InternallySelfDual(_)) = (classify(p)?, classify(q)?)
    else {
        return Ok(false);
    };
    let comix = todd_coxeter(&comix_presentation(pres_p, pres_q)?, &[], coset_cap)?;
    let images = |s: &Sggi| -> Result<Vec<Permutation>> {
        Ok(dualizing_set(s)?.iter().map(|a| covering_image(s.gens(), &comix.gens, a)).collect())
    };
    let from_q = images(q)?;
    Ok(images(p)?.iter().any(|a| from_q.contains(a)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{polygon, simplex};

    #[test]
    fn diagonal_mix() {
        let p = polygon(5).unwrap();
        let m = mix(&p, &p).unwrap();
        assert_eq!(m.sggi.order(), p.order());
        assert_eq!(m.left().gens(), p.gens());
        assert_eq!(m.right().gens(), p.gens());
    }

    #[test]
    fn coprime_polygons() {
        let m = mix(&polygon(5).unwrap(), &polygon(7).unwrap()).unwrap();
        assert_eq!(m.sggi.schlafli_type().0, vec![35]);
        assert_eq!(m.sggi.order(), 70);
    }

    #[test]
    fn rank_mismatch() {
        let e = mix(&polygon(5).unwrap(), &simplex(3).unwrap()).unwrap_err();
        assert_eq!(e, Error::RankMismatch { left: 2, right: 3 });
    }

    #[test]
    fn edge_positions() {
        let s = simplex(3).unwrap();
        assert_eq!(mix_edge(&s, 0).unwrap().order(), 48);
        assert_eq!(mix_edge(&s, 2).unwrap().order(), 48);
        assert!(mix_edge(&s, 1).is_err());
        let twice = mix_edge(&mix_edge(&s, 0).unwrap(), 0).unwrap();
        assert_eq!(twice.order(), 48);
    }

    #[test]
    fn int_to_ext_on_tetrahedron() {
        let p = simplex(3).unwrap();
        let e = int_to_ext(&p).unwrap();
        assert_eq!(e.order(), 4 * p.order());
        assert_eq!(classify(&e).unwrap(), DualityClass::ExternallySelfDual);
        assert_eq!(e.schlafli_type().0, vec![6, 6]);
        assert_eq!(int_to_ext(&polygon(4).unwrap()).unwrap_err(), Error::NotInternallySelfDual);
    }

    #[test]
    fn int_to_ext_on_polygon_stays_dihedral() {
        let e = int_to_ext(&polygon(5).unwrap()).unwrap();
        assert_eq!(e.order(), 20);
        assert_eq!(classify(&e).unwrap(), DualityClass::ExternallySelfDual);
    }

    #[test]
    fn mixing_with_its_edge_extension() {
        let p = polygon(7).unwrap();
        let q = mix_edge(&p, 0).unwrap();
        assert_eq!(classify(&q).unwrap(), DualityClass::ExternallySelfDual);
        assert!(!mix_internally_self_dual(&p, &q).unwrap());
    }
}
