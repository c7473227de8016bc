//! Dualities of regular polytopes: self-duality, dualizing elements and
//! the internal/external classification, plus the rank-3 Petrie analogues.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::permcore::{center, conjugator_search, conjugators, Permutation};
use crate::sggi::{check_string, pair_group, Sggi};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DualityClass {
    NotSelfDual,
    InternallySelfDual(Permutation),
    ExternallySelfDual,
}

impl DualityClass {
    pub fn name(&self) -> &'static str {
        match self {
            DualityClass::NotSelfDual => "none",
            DualityClass::InternallySelfDual(_) => "internal",
            DualityClass::ExternallySelfDual => "external",
        }
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, DualityClass::InternallySelfDual(_))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum PetrieClass {
    NotSelfPetrie,
    InternallySelfPetrie,
    ExternallySelfPetrie,
}

/// Generators in reverse order.
pub fn dual(p: &Sggi) -> Sggi {
    let gens = p.gens().iter().rev().cloned().collect();
    check_string(gens).expect("reversal preserves the string conditions").with_cap(p.cap())
}

/// `i ↦ n - 1 - i` on each letter.
pub fn star_word(w: &[usize], n: usize) -> Vec<usize> {
    w.iter().map(|&i| n - 1 - i).collect()
}

/// Whether `ρ_i ↦ ρ_{n-1-i}` extends to an automorphism.
pub fn is_self_dual(p: &Sggi) -> Result<bool> {
    if !p.schlafli_type().is_palindrome() {
        return Ok(false);
    }
    let rev: Vec<Permutation> = p.gens().iter().rev().cloned().collect();
    Ok(pair_group(p.gens(), &rev, p.cap()).order() == p.order())
}

/// `α ρ_i = ρ_{n-1-i} α` for every `i`, without a membership check.
pub fn satisfies_dualizing(p: &Sggi, a: &Permutation) -> bool {
    let n = p.rank();
    (0..n).all(|i| a.then(p.gen(i)) == p.gen(n - 1 - i).then(a))
}

pub fn is_dualizing(p: &Sggi, a: &Permutation) -> Result<bool> {
    if !p.contains(a) {
        return Err(Error::NotInGroup);
    }
    Ok(satisfies_dualizing(p, a))
}

fn reversed(p: &Sggi) -> Vec<Permutation> {
    p.gens().iter().rev().cloned().collect()
}

/// Classifies `P`; an internal witness is the lexicographically least
/// dualizing element.
pub fn classify(p: &Sggi) -> Result<DualityClass> {
    if !is_self_dual(p)? {
        return Ok(DualityClass::NotSelfDual);
    }
    match conjugator_search(p.group(), p.gens(), &reversed(p))? {
        Some(a) => Ok(DualityClass::InternallySelfDual(a)),
        None => Ok(DualityClass::ExternallySelfDual),
    }
}

/// Every dualizing element, in lexicographic order.
pub fn dualizing_set(p: &Sggi) -> Result<Vec<Permutation>> {
    conjugators(p.group(), p.gens(), &reversed(p), false)
}

/// Generators `(ρ0ρ2, ρ1, ρ2)`.
pub fn petrie(p: &Sggi) -> Result<Sggi> {
    if p.rank() != 3 {
        return Err(Error::BadParameter(format!("petrie needs rank 3, got {}", p.rank())));
    }
    let r02 = p.gen(0).then(p.gen(2));
    if r02.is_identity() {
        return Err(Error::DegeneratePetrie);
    }
    Ok(check_string(vec![r02, p.gen(1).clone(), p.gen(2).clone()])?.with_cap(p.cap()))
}

/// Self-Petrie class read off from the duality class of `(P*)^π`.
pub fn classify_petrie(p: &Sggi) -> Result<PetrieClass> {
    let q = petrie(&dual(p))?;
    Ok(match classify(&q)? {
        DualityClass::NotSelfDual => PetrieClass::NotSelfPetrie,
        DualityClass::InternallySelfDual(_) => PetrieClass::InternallySelfPetrie,
        DualityClass::ExternallySelfDual => PetrieClass::ExternallySelfPetrie,
    })
}

/// Self-Petrie class straight from the map `ρ0 ↦ ρ0ρ2`, `ρ1 ↦ ρ1`, `ρ2 ↦ ρ2`.
pub fn classify_petrie_direct(p: &Sggi) -> Result<PetrieClass> {
    let q = petrie(p)?;
    if pair_group(p.gens(), q.gens(), p.cap()).order() != p.order() {
        return Ok(PetrieClass::NotSelfPetrie);
    }
    Ok(match conjugator_search(p.group(), p.gens(), q.gens())? {
        Some(_) => PetrieClass::InternallySelfPetrie,
        None => PetrieClass::ExternallySelfPetrie,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassReport {
    pub self_dual: bool,
    pub class: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dualizing_count: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub center_order: Option<u128>,
}

pub fn class_report(p: &Sggi) -> Result<ClassReport> {
    let class = classify(p)?;
    let mut report = ClassReport {
        self_dual: class != DualityClass::NotSelfDual,
        class: class.name(),
        witness: None,
        dualizing_count: None,
        center_order: None,
    };
    if let DualityClass::InternallySelfDual(a) = &class {
        report.witness = Some(a.to_string());
        report.dualizing_count = Some(dualizing_set(p)?.len());
        report.center_order = Some(center(p.group())?.order());
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{polygon, polygon_dualizing_word, simplex};

    #[test]
    fn star_words() {
        assert_eq!(star_word(&[], 3), Vec::<usize>::new());
        assert_eq!(star_word(&[0, 2, 1], 3), vec![2, 0, 1]);
        assert_eq!(star_word(&[0, 1, 0], 2), vec![1, 0, 1]);
    }

    #[test]
    fn pentagon_and_square() {
        let p5 = polygon(5).unwrap();
        let w = p5.evaluate(&polygon_dualizing_word(5));
        assert_eq!(classify(&p5).unwrap(), DualityClass::InternallySelfDual(w));
        assert_eq!(classify(&polygon(4).unwrap()).unwrap(), DualityClass::ExternallySelfDual);
        assert_eq!(dualizing_set(&p5).unwrap().len(), 1);
    }

    #[test]
    fn dual_is_involutive() {
        let s = simplex(3).unwrap();
        assert_eq!(dual(&dual(&s)).gens(), s.gens());
    }

    #[test]
    fn identity_is_not_dualizing() {
        let s = simplex(3).unwrap();
        assert!(!is_dualizing(&s, &Permutation::identity(4)).unwrap());
        let outside = polygon(5).unwrap();
        assert_eq!(
            is_dualizing(&outside, &Permutation::transposition(5, 1, 2).unwrap()).unwrap_err(),
            Error::NotInGroup
        );
    }

    #[test]
    fn petrie_twice_is_identity() {
        let s = simplex(3).unwrap();
        let pp = petrie(&petrie(&s).unwrap()).unwrap();
        assert_eq!(pp.gens(), s.gens());
        assert_eq!(classify_petrie(&s).unwrap(), classify_petrie_direct(&s).unwrap());
    }

    #[test]
    fn degenerate_petrie() {
        let g = Permutation::transposition(2, 1, 2).unwrap();
        let s = check_string(vec![g.clone(), g.clone(), g]).unwrap();
        assert_eq!(petrie(&s).unwrap_err(), Error::DegeneratePetrie);
    }
}
