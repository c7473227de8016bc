//! String groups generated by involutions.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::permcore::{in_derived_subgroup, intersection_data, normal_closure, PermGroup, Permutation, StabChain};

/// Generators `ρ_0..ρ_{n-1}` acting on a shared set of points.
#[derive(Debug, Clone)]
pub struct Sggi {
    gens: Vec<Permutation>,
    degree: usize,
    group: PermGroup,
}

/// Orders of `ρ_{i-1}ρ_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct SchlafliType(pub Vec<u64>);

impl SchlafliType {
    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }
}

impl fmt::Display for SchlafliType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A failure of the intersection property: `⟨I⟩ ∩ ⟨J⟩` contains
/// `element`, which is outside `⟨I ∩ J⟩`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionWitness {
    pub i: Vec<usize>,
    pub j: Vec<usize>,
    pub element: Permutation,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntersectionReport {
    pub ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<IntersectionWitness>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckReport {
    pub valid: bool,
    pub rank: usize,
    pub degree: usize,
    pub order: u128,
    pub schlafli: SchlafliType,
    pub intersection: IntersectionReport,
}

/// Validates the string conditions: non-identity involutions, with
/// `ρ_i ρ_j = ρ_j ρ_i` whenever `|i - j| ≥ 2`.
pub fn check_string(gens: Vec<Permutation>) -> Result<Sggi> {
    let degree = gens.first().map(|g| g.degree()).unwrap_or(0);
    if gens.is_empty() {
        return Err(Error::BadParameter("rank must be at least 1".into()));
    }
    for g in &gens {
        if g.degree() != degree {
            return Err(Error::DegreeMismatch { left: degree, right: g.degree() });
        }
    }
    for (i, g) in gens.iter().enumerate() {
        if g.is_identity() {
            return Err(Error::IdentityGenerator(i));
        }
        if !g.is_involution() {
            return Err(Error::NotInvolution(i));
        }
    }
    for i in 0..gens.len() {
        for j in i + 2..gens.len() {
            if !gens[i].commutes_with(&gens[j]) {
                return Err(Error::NotCommuting(i, j));
            }
        }
    }
    let group = PermGroup::new(degree, gens.clone())?;
    Ok(Sggi { gens, degree, group })
}

impl Sggi {
    pub fn new(gens: Vec<Permutation>) -> Result<Sggi> {
        check_string(gens)
    }

    pub fn with_cap(mut self, cap: usize) -> Sggi {
        self.group = self.group.with_cap(cap);
        self
    }

    pub fn cap(&self) -> usize {
        self.group.cap()
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn gens(&self) -> &[Permutation] {
        &self.gens
    }

    pub fn gen(&self, i: usize) -> &Permutation {
        &self.gens[i]
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn order(&self) -> u128 {
        self.group.order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.group.contains(g)
    }

    pub fn schlafli_type(&self) -> SchlafliType {
        SchlafliType((1..self.rank()).map(|i| self.gens[i - 1].then(&self.gens[i]).order()).collect())
    }

    /// Product of generators read left to right.
    pub fn evaluate(&self, word: &[usize]) -> Permutation {
        word.iter().fold(Permutation::identity(self.degree), |acc, &i| acc.then(&self.gens[i]))
    }

    /// `Γ_S = ⟨ρ_i | i ∉ S⟩`.
    pub fn parabolic(&self, s: &[usize]) -> PermGroup {
        let keep: Vec<usize> = (0..self.rank()).filter(|i| !s.contains(i)).collect();
        self.subgroup(&keep)
    }

    /// `⟨ρ_i | i ∈ idx⟩`.
    pub fn subgroup(&self, idx: &[usize]) -> PermGroup {
        let gens = idx.iter().map(|&i| self.gens[i].clone()).collect();
        PermGroup::new(self.degree, gens).unwrap().with_cap(self.cap())
    }

    /// Checks the intersection property. Contiguous generator ranges are
    /// reduced recursively: `⟨a..b⟩` is a C-group when `⟨a..b-1⟩` and
    /// `⟨a+1..b⟩` are and `⟨a..b-1⟩ ∩ ⟨a+1..b⟩ = ⟨a+1..b-1⟩`.
    pub fn check_intersection(&self) -> Result<IntersectionReport> {
        let mut memo = HashMap::new();
        match self.range_c_group(0, self.rank() - 1, &mut memo)? {
            None => Ok(IntersectionReport { ok: true, witness: None }),
            Some(w) => Ok(IntersectionReport { ok: false, witness: Some(w) }),
        }
    }

    fn range_c_group(
        &self,
        a: usize,
        b: usize,
        memo: &mut HashMap<(usize, usize), Option<IntersectionWitness>>,
    ) -> Result<Option<IntersectionWitness>> {
        if let Some(r) = memo.get(&(a, b)) {
            return Ok(r.clone());
        }
        let result = if a == b {
            None
        } else if let Some(w) = self.range_c_group(a, b - 1, memo)? {
            Some(w)
        } else if let Some(w) = self.range_c_group(a + 1, b, memo)? {
            Some(w)
        } else {
            let left: Vec<usize> = (a..b).collect();
            let right: Vec<usize> = (a + 1..=b).collect();
            let middle: Vec<usize> = (a + 1..b).collect();
            self.intersection_gap(&left, &right, &middle)?
        };
        memo.insert((a, b), result.clone());
        Ok(result)
    }

    /// Witness that `⟨I⟩ ∩ ⟨J⟩ ≠ ⟨K⟩`, if any (with `⟨K⟩ ⊆` both).
    fn intersection_gap(&self, i: &[usize], j: &[usize], k: &[usize]) -> Result<Option<IntersectionWitness>> {
        let gi = self.subgroup(i);
        let gj = self.subgroup(j);
        let gk = self.subgroup(k);
        // The coset orbit is bounded by the index of the first group.
        let (big, small) = if gi.order() >= gj.order() { (&gi, &gj) } else { (&gj, &gi) };
        let data = intersection_data(big, small, self.cap())?;
        if data.order == gk.order() {
            return Ok(None);
        }
        let element = data
            .generators
            .into_iter()
            .find(|g| !gk.contains(g))
            .expect("a larger intersection has a generator outside the smaller group");
        Ok(Some(IntersectionWitness { i: i.to_vec(), j: j.to_vec(), element }))
    }

    /// Checks the intersection property over every pair of index sets.
    /// Oracle for [`check_intersection`](Self::check_intersection).
    pub fn check_intersection_exhaustive(&self) -> Result<IntersectionReport> {
        let n = self.rank();
        let sets: Vec<Vec<usize>> = (0u32..1 << n).map(|m| (0..n).filter(|&i| m >> i & 1 == 1).collect()).collect();
        for i in &sets {
            for j in &sets {
                let k: Vec<usize> = i.iter().copied().filter(|x| j.contains(x)).collect();
                if let Some(w) = self.intersection_gap(i, j, &k)? {
                    return Ok(IntersectionReport { ok: false, witness: Some(w) });
                }
            }
        }
        Ok(IntersectionReport { ok: true, witness: None })
    }

    pub fn is_string_c_group(&self) -> Result<bool> {
        Ok(self.check_intersection()?.ok)
    }

    pub fn check_report(&self) -> Result<CheckReport> {
        let intersection = self.check_intersection()?;
        Ok(CheckReport {
            valid: intersection.ok,
            rank: self.rank(),
            degree: self.degree,
            order: self.order(),
            schlafli: self.schlafli_type(),
            intersection,
        })
    }

    /// Whether the image of `ρ_i ρ_j` in the abelianization is trivial.
    pub fn abelianization_identifies(&self, i: usize, j: usize) -> bool {
        in_derived_subgroup(&self.group, &self.gens[i].then(&self.gens[j]))
    }

    /// Relabels points by `pi`, conjugating every generator.
    pub fn relabel(&self, pi: &Permutation) -> Sggi {
        let gens = self.gens.iter().map(|g| g.conjugate_by(pi)).collect();
        check_string(gens).expect("conjugation preserves the string conditions").with_cap(self.cap())
    }

    /// Text format: `rank n degree k`, then one generator per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("rank {} degree {}\n", self.rank(), self.degree);
        for g in &self.gens {
            out.push_str(&g.to_string());
            out.push('\n');
        }
        out
    }

    pub fn parse(text: &str) -> Result<Sggi> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
        let words: Vec<&str> = header.split_whitespace().collect();
        let (rank, degree) = match words.as_slice() {
            ["rank", n, "degree", k] => (
                n.parse::<usize>().map_err(|_| Error::parse(hl, "bad rank"))?,
                k.parse::<usize>().map_err(|_| Error::parse(hl, "bad degree"))?,
            ),
            _ => return Err(Error::parse(hl, "expected `rank <n> degree <k>`")),
        };
        let mut gens = Vec::new();
        for (ln, line) in lines {
            let g = Permutation::parse_with_degree(line, degree).map_err(|e| Error::parse(ln, e.to_string()))?;
            gens.push(g);
        }
        if gens.len() != rank {
            return Err(Error::parse(hl, format!("expected {rank} generators, found {}", gens.len())));
        }
        check_string(gens)
    }
}

/// The group generated by the pairs `(x_i, y_i)` on the disjoint union.
pub(crate) fn pair_group(xs: &[Permutation], ys: &[Permutation], cap: usize) -> PermGroup {
    let gens: Vec<Permutation> = xs.iter().zip(ys).map(|(x, y)| x.disjoint_sum(y)).collect();
    let degree = gens.first().map(|g| g.degree()).unwrap_or(0);
    PermGroup::new(degree, gens).unwrap().with_cap(cap)
}

/// Whether `ρ_i ↦ ρ'_i` extends to a homomorphism `Γ(P) → Γ(Q)`
/// (surjective by construction).
pub fn covers(p: &Sggi, q: &Sggi) -> Result<bool> {
    if p.rank() != q.rank() {
        return Err(Error::RankMismatch { left: p.rank(), right: q.rank() });
    }
    let pair = pair_group(&p.gens, &q.gens, p.cap());
    Ok(pair.order() == p.order())
}

/// With `G` covering the string C-group `L`: whether the covering is
/// injective on the facet subgroup `⟨ρ_0..ρ_{n-2}⟩`, which certifies `G`.
pub fn quotient_criterion(g: &Sggi, l: &Sggi) -> Result<bool> {
    if !covers(g, l)? {
        return Err(Error::NotACovering);
    }
    if !l.is_string_c_group()? {
        return Err(Error::NotStringCGroup);
    }
    let n = g.rank();
    let facet: Vec<usize> = (0..n - 1).collect();
    Ok(g.subgroup(&facet).order() == l.subgroup(&facet).order())
}

/// Image of `x ∈ Γ(P)` under the covering `Γ(P) → Γ(Q)` given by the generators.
pub fn image_under_covering(p: &Sggi, q: &Sggi, x: &Permutation) -> Result<Permutation> {
    if !covers(p, q)? {
        return Err(Error::NotACovering);
    }
    if !p.contains(x) {
        return Err(Error::NotInGroup);
    }
    Ok(covering_image(&p.gens, &q.gens, x))
}

/// Image of `x` under `xs[i] ↦ ys[i]`, assumed to be a well-defined homomorphism.
pub(crate) fn covering_image(xs: &[Permutation], ys: &[Permutation], x: &Permutation) -> Permutation {
    let (dp, dq) = (xs[0].degree(), ys[0].degree());
    let gens: Vec<Permutation> = xs.iter().zip(ys).map(|(a, b)| a.disjoint_sum(b)).collect();
    let priority: Vec<usize> = (0..dp + dq).collect();
    let chain = StabChain::with_base_priority(dp + dq, &gens, Some(&priority));
    // The kernel of the projection to P is trivial, so every base point lies in P.
    let (residue, complete) = chain.sift(&x.disjoint_sum(&Permutation::identity(dq)));
    debug_assert!(complete);
    residue.restrict(dp, dq).inverse()
}

/// `Γ(P)/N` acting on the right cosets of `N`, the normal closure of `seeds`.
/// Fails with `IdentityGenerator` when some `ρ_i` lies in `N`.
pub fn quotient(p: &Sggi, seeds: &[Permutation]) -> Result<Sggi> {
    let n = normal_closure(&p.group, seeds);
    let chain = n.chain();
    let id = Permutation::identity(p.degree);
    let mut index: HashMap<Permutation, usize> = HashMap::new();
    index.insert(chain.coset_canonical(&id), 0);
    let mut reps = vec![id];
    let mut images: Vec<Vec<usize>> = vec![Vec::new(); p.rank()];
    let mut i = 0;
    while i < reps.len() {
        let r = reps[i].clone();
        i += 1;
        for (k, g) in p.gens.iter().enumerate() {
            let c = chain.coset_canonical(&r.then(g));
            let next = index.len();
            let j = *index.entry(c).or_insert(next);
            if j == next {
                if next >= p.cap() {
                    return Err(Error::CapExceeded { cap: p.cap() });
                }
                reps.push(r.then(g));
            }
            images[k].push(j);
        }
    }
    let gens = images.into_iter().map(Permutation::from_images).collect::<Result<Vec<_>>>()?;
    Ok(check_string(gens)?.with_cap(p.cap()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_with_degree(s, n).unwrap()
    }

    fn sggi(gens: &[&str], n: usize) -> Sggi {
        check_string(gens.iter().map(|s| p(s, n)).collect()).unwrap()
    }

    fn simplex() -> Sggi {
        sggi(&["(1,2)", "(2,4)", "(3,4)"], 4)
    }

    #[test]
    fn string_check_errors() {
        assert!(check_string(vec![p("(1,2)", 2), p("(1,2)", 2)]).is_ok());
        let e = check_string(vec![p("(1,2)", 4), p("(3,4)", 4), p("(1,3)", 4)]).unwrap_err();
        assert_eq!(e, Error::NotCommuting(0, 2));
        let e = check_string(vec![p("(1,2)", 3), p("()", 3)]).unwrap_err();
        assert_eq!(e, Error::IdentityGenerator(1));
        let e = check_string(vec![p("(1,2,3)", 3)]).unwrap_err();
        assert_eq!(e, Error::NotInvolution(0));
    }

    #[test]
    fn simplex_basics() {
        let s = simplex();
        assert_eq!(s.schlafli_type(), SchlafliType(vec![3, 3]));
        assert_eq!(s.order(), 24);
        assert_eq!(s.parabolic(&[]).order(), 24);
        assert_eq!(s.parabolic(&[2]).order(), 6);
        assert_eq!(s.parabolic(&[0, 1]).order(), 2);
        assert_eq!(s.parabolic(&[0, 1, 2]).order(), 1);
        assert!(s.is_string_c_group().unwrap());
        assert!(s.check_intersection_exhaustive().unwrap().ok);
    }

    #[test]
    fn intersection_failure_has_witness() {
        let s = sggi(&["(1,2)", "(2,3)", "(1,2)"], 3);
        let r = s.check_intersection().unwrap();
        assert!(!r.ok);
        let w = r.witness.unwrap();
        assert!(s.subgroup(&w.i).contains(&w.element));
        assert!(s.subgroup(&w.j).contains(&w.element));
        let k: Vec<usize> = w.i.iter().copied().filter(|x| w.j.contains(x)).collect();
        assert!(!s.subgroup(&k).contains(&w.element));
        assert!(!s.check_intersection_exhaustive().unwrap().ok);
    }

    #[test]
    fn abelianization() {
        let s = simplex();
        assert!(s.abelianization_identifies(0, 2));
        assert!(s.abelianization_identifies(1, 1));
    }

    #[test]
    fn text_roundtrip() {
        let s = simplex();
        let t = s.to_text();
        assert_eq!(t, "rank 3 degree 4\n(1,2)\n(2,4)\n(3,4)\n");
        let back = Sggi::parse(&t).unwrap();
        assert_eq!(back.gens(), s.gens());
        assert!(matches!(Sggi::parse("rank 2 degree 3\n(1,2)\n"), Err(Error::Parse { .. })));
        assert!(matches!(Sggi::parse("rank 1 degree 3\n(1,4)\n"), Err(Error::Parse { line: 2, .. })));
    }

    #[test]
    fn covering_basics() {
        let s = simplex();
        assert!(covers(&s, &s).unwrap());
        assert!(quotient_criterion(&s, &s).unwrap());
        // Sign homomorphism onto the rank-3 string group on two points.
        let sign = sggi(&["(1,2)", "(1,2)", "(1,2)"], 2);
        assert!(covers(&s, &sign).unwrap());
        assert!(!covers(&sign, &s).unwrap());
        let img = image_under_covering(&s, &sign, &p("(1,2,3)", 4)).unwrap();
        assert!(img.is_identity());
        let img = image_under_covering(&s, &sign, &p("(1,2)", 4)).unwrap();
        assert_eq!(img, p("(1,2)", 2));
    }

    #[test]
    fn quotient_by_center_of_hexagon() {
        let hex = sggi(&["(1,2)(3,6)(4,5)", "(2,3)(4,6)"], 6);
        assert_eq!(hex.order(), 12);
        let z = hex.evaluate(&[0, 1, 0, 1, 0, 1]);
        let q = quotient(&hex, &[z]).unwrap();
        assert_eq!(q.order(), 6);
        assert_eq!(q.schlafli_type(), SchlafliType(vec![3]));
        assert!(covers(&hex, &q).unwrap());
        assert!(quotient(&hex, &[hex.gen(0).clone()]).is_err());
    }
}
