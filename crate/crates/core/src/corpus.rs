//! Named instances and the built-in survey corpora.

use std::fmt;

use crate::constructions::{cubic_toroid, edge, polygon, simplex, torus44, LabeledTetrahedron};
use crate::cpr::{
    family_all_p, family_even_k, family_n3plus, family_n4plus, family_petrie_simplex, family_rank_n, CprGraph,
};
use crate::error::{Error, Result};
use crate::fpgroup::{self, Entry, Presentation};
use crate::sggi::Sggi;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Instance {
    Polygon(usize),
    Simplex(usize),
    Tetrahedron,
    Edge,
    Torus44(usize),
    CubicToroid(usize, usize),
    AllP(usize),
    EvenK(usize, usize),
    RankN(usize),
    PetrieSimplex(usize),
    N3Plus(usize),
    N4Plus(usize),
    Coxeter(Vec<Entry>, Vec<Vec<usize>>),
}

pub const FAMILIES: &[&str] = &[
    "polygon",
    "simplex",
    "tetrahedron",
    "edge",
    "torus44",
    "cubic-toroid",
    "all-p",
    "even-k",
    "rank-n",
    "petrie-simplex",
    "n3plus",
    "n4plus",
];

impl Instance {
    /// A family by name with its numeric parameters.
    pub fn family(
        name: &str,
        p: Option<usize>,
        k: Option<usize>,
        n: Option<usize>,
        s: Option<usize>,
    ) -> Result<Instance> {
        let need = |v: Option<usize>, flag: &str| {
            v.ok_or_else(|| Error::BadParameter(format!("family {name} needs --{flag}")))
        };
        Ok(match name {
            "polygon" => Instance::Polygon(need(p, "p")?),
            "simplex" => Instance::Simplex(need(n, "n")?),
            "tetrahedron" => Instance::Tetrahedron,
            "edge" => Instance::Edge,
            "torus44" => Instance::Torus44(need(s, "s")?),
            "cubic-toroid" => Instance::CubicToroid(need(n, "n")?, need(s, "s")?),
            "all-p" => Instance::AllP(need(p, "p")?),
            "even-k" => Instance::EvenK(need(p, "p")?, need(k, "k")?),
            "rank-n" => Instance::RankN(need(n, "n")?),
            "petrie-simplex" => Instance::PetrieSimplex(need(n, "n")?),
            "n3plus" => Instance::N3Plus(need(n, "n")?),
            "n4plus" => Instance::N4Plus(need(n, "n")?),
            _ => {
                return Err(Error::BadParameter(format!(
                    "unknown family {name:?}; expected one of {}",
                    FAMILIES.join(", ")
                )))
            }
        })
    }

    /// The CPR graph, for families defined by one.
    pub fn cpr(&self) -> Option<Result<CprGraph>> {
        Some(match self {
            Instance::AllP(p) => family_all_p(*p),
            Instance::EvenK(p, k) => family_even_k(*p, *k),
            Instance::RankN(n) => family_rank_n(*n),
            Instance::PetrieSimplex(n) => family_petrie_simplex(*n),
            Instance::N3Plus(n) => family_n3plus(*n),
            Instance::N4Plus(n) => family_n4plus(*n),
            _ => return None,
        })
    }

    pub fn presentation(&self) -> Option<Result<Presentation>> {
        let Instance::Coxeter(entries, relators) = self else {
            return None;
        };
        Some(relators.iter().try_fold(fpgroup::coxeter(entries), |p, r| p.add_relator(r.clone())))
    }

    pub fn build(&self, cap: usize) -> Result<Sggi> {
        if let Some(g) = self.cpr() {
            return Ok(g?.to_sggi()?.with_cap(cap));
        }
        let s = match self {
            Instance::Polygon(p) => polygon(*p)?,
            Instance::Simplex(n) => simplex(*n)?,
            Instance::Tetrahedron => LabeledTetrahedron::sggi(),
            Instance::Edge => edge(),
            Instance::Torus44(s) => torus44(*s)?.sggi,
            Instance::CubicToroid(n, s) => cubic_toroid(*n, *s)?.sggi,
            Instance::Coxeter(..) => fpgroup::to_sggi(&self.presentation().unwrap()?, cap)?,
            _ => unreachable!("cpr families handled above"),
        };
        Ok(s.with_cap(cap))
    }
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Instance::Polygon(p) => write!(f, "polygon p={p}"),
            Instance::Simplex(n) => write!(f, "simplex n={n}"),
            Instance::Tetrahedron => write!(f, "tetrahedron"),
            Instance::Edge => write!(f, "edge"),
            Instance::Torus44(s) => write!(f, "torus44 s={s}"),
            Instance::CubicToroid(n, s) => write!(f, "cubic-toroid n={n} s={s}"),
            Instance::AllP(p) => write!(f, "all-p p={p}"),
            Instance::EvenK(p, k) => write!(f, "even-k p={p} k={k}"),
            Instance::RankN(n) => write!(f, "rank-n n={n}"),
            Instance::PetrieSimplex(n) => write!(f, "petrie-simplex n={n}"),
            Instance::N3Plus(n) => write!(f, "n3plus n={n}"),
            Instance::N4Plus(n) => write!(f, "n4plus n={n}"),
            Instance::Coxeter(entries, relators) => {
                let e: Vec<String> = entries
                    .iter()
                    .map(|e| match e {
                        Entry::Finite(p) => p.to_string(),
                        Entry::Infinite => "inf".into(),
                    })
                    .collect();
                write!(f, "coxeter {}", e.join(","))?;
                for r in relators {
                    let w: Vec<String> = r.iter().map(|x| x.to_string()).collect();
                    write!(f, " / {}", w.join(" "))?;
                }
                Ok(())
            }
        }
    }
}

pub const CORPORA: &[&str] = &["polygons", "torus44", "all-p", "standard"];

pub fn corpus(name: &str) -> Result<Vec<Instance>> {
    Ok(match name {
        "polygons" => (3..=12).map(Instance::Polygon).collect(),
        "torus44" => (2..=9).map(Instance::Torus44).collect(),
        "all-p" => (7..=12).map(Instance::AllP).collect(),
        "standard" => standard(),
        _ => {
            return Err(Error::BadParameter(format!("unknown corpus {name:?}; expected one of {}", CORPORA.join(", "))))
        }
    })
}

/// A mixed corpus of desk-scale instances across every construction.
pub fn standard() -> Vec<Instance> {
    let mut v: Vec<Instance> = (3..=12).map(Instance::Polygon).collect();
    v.extend((2..=5).map(Instance::Simplex));
    v.push(Instance::Tetrahedron);
    v.extend((2..=9).map(Instance::Torus44));
    v.extend((2..=4).map(|s| Instance::CubicToroid(3, s)));
    v.extend((7..=10).map(Instance::AllP));
    v.extend([(6, 1), (6, 3), (8, 1)].map(|(p, k)| Instance::EvenK(p, k)));
    v.extend((5..=7).map(Instance::RankN));
    v.extend((5..=6).map(Instance::PetrieSimplex));
    v.extend((4..=6).map(Instance::N3Plus));
    v.extend((6..=7).map(Instance::N4Plus));
    for t in ["3,4,3", "3,3,3", "2,2", "4,3", "3,5", "5,3"] {
        v.push(Instance::Coxeter(Entry::parse_list(t).unwrap(), Vec::new()));
    }
    v
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_parameters() {
        assert_eq!(Instance::family("all-p", Some(9), None, None, None).unwrap(), Instance::AllP(9));
        assert!(Instance::family("even-k", Some(6), None, None, None).is_err());
        assert!(Instance::family("nope", None, None, None, None).is_err());
        assert_eq!(Instance::CubicToroid(3, 2).to_string(), "cubic-toroid n=3 s=2");
    }

    #[test]
    fn standard_corpus_builds() {
        for inst in standard() {
            let s = inst.build(1_000_000).unwrap_or_else(|e| panic!("{inst}: {e}"));
            assert!(s.order() > 1);
        }
    }
}
