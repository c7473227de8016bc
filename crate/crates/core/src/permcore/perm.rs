use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A bijection of `{0..degree}`. Points are printed and parsed 1-based.
///
/// Products read left to right: `a.then(&b)` sends `x` to `b(a(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation { images: (0..degree as u32).collect() }
    }

    /// Builds from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x >= n || seen[x] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[x] = true;
        }
        Ok(Permutation { images: images.into_iter().map(|x| x as u32).collect() })
    }

    /// Trusted constructor for internally computed images.
    pub(crate) fn from_raw(images: Vec<u32>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &x)| x as usize == i)
        });
        Permutation { images }
    }

    /// Builds from 1-based cycles. Fixed points may be omitted.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (idx, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(Error::NotAPermutation(format!("point {p} outside 1..{degree}")));
                }
                if touched[p - 1] {
                    return Err(Error::NotAPermutation(format!("point {p} repeated")));
                }
                touched[p - 1] = true;
                let q = cycle[(idx + 1) % cycle.len()];
                images[p - 1] = (q - 1) as u32;
            }
        }
        Ok(Permutation { images })
    }

    /// The transposition of two 1-based points.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Result<Self> {
        Self::from_cycles(degree, &[vec![a, b]])
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of a 0-based point.
    #[inline]
    pub fn image(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| x as usize == i)
    }

    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(self.then(other))
    }

    /// `self` first, then `other`. Panics on degree mismatch.
    #[inline]
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in product");
        Permutation { images: self.images.iter().map(|&x| other.images[x as usize]).collect() }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    pub fn pow(&self, e: i64) -> Permutation {
        let mut base = if e < 0 { self.inverse() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            e >>= 1;
        }
        acc
    }

    /// `g⁻¹ · self · g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        let mut out = vec![0u32; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            out[g.images[i] as usize] = g.images[x as usize];
        }
        Permutation { images: out }
    }

    pub fn commutes_with(&self, other: &Permutation) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| other.images[x as usize] == self.images[other.images[i] as usize])
    }

    pub fn is_involution(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| self.images[x as usize] as usize == i)
    }

    /// Smallest 0-based point moved, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, &x)| x as usize != *i).map(|(i, _)| i)
    }

    /// Disjoint cycles, 1-based, each starting at its minimum, sorted by minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.image(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.image(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles().iter().fold(1u64, |acc, c| lcm(acc, c.len() as u64))
    }

    /// Acts as `self` on the first block of points and `other` on the next.
    pub fn disjoint_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.degree() as u32;
        let mut images = self.images.clone();
        images.extend(other.images.iter().map(|&x| x + shift));
        Permutation { images }
    }

    /// Restriction to points `offset..offset+len`, assumed invariant.
    pub fn restrict(&self, offset: usize, len: usize) -> Permutation {
        Permutation { images: self.images[offset..offset + len].iter().map(|&x| x - offset as u32).collect() }
    }

    /// Parses cycle notation with the given degree.
    pub fn parse_with_degree(text: &str, degree: usize) -> Result<Permutation> {
        let cycles = parse_cycles(text)?;
        if let Some(&m) = cycles.iter().flatten().max() {
            if m > degree {
                return Err(Error::NotAPermutation(format!("point {m} exceeds degree {degree}")));
            }
        }
        Permutation::from_cycles(degree, &cycles)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let mut rest = text.trim();
    let mut cycles = Vec::new();
    if rest.is_empty() {
        return Err(Error::NotAPermutation("empty cycle string".into()));
    }
    while !rest.is_empty() {
        let open = rest.strip_prefix('(').ok_or_else(|| Error::NotAPermutation(format!("expected '(' in {text:?}")))?;
        let close = open.find(')').ok_or_else(|| Error::NotAPermutation(format!("unclosed cycle in {text:?}")))?;
        let body = &open[..close];
        let points = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<usize>().map_err(|_| Error::NotAPermutation(format!("bad point {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        if points.len() > 1 {
            cycles.push(points);
        }
        rest = open[close + 1..].trim_start();
    }
    Ok(cycles)
}

impl FromStr for Permutation {
    type Err = Error;

    /// Degree is the largest point mentioned.
    fn from_str(s: &str) -> Result<Self> {
        let cycles = parse_cycles(s)?;
        let degree = cycles.iter().flatten().copied().max().unwrap_or(0);
        Permutation::from_cycles(degree, &cycles)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let body: Vec<String> = c.iter().map(|p| p.to_string()).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}[{}]", self.degree())
    }
}

impl serde::Serialize for Permutation {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_with_degree(s, n).unwrap()
    }

    #[test]
    fn involution_squares_to_identity() {
        let t = p("(1 2)", 2);
        assert!(t.then(&t).is_identity());
        let g = p("(1,3,2)", 3);
        assert_eq!(Permutation::identity(3).then(&g), g);
    }

    #[test]
    fn compose_is_left_to_right() {
        let a = p("(1,2)", 3);
        let b = p("(2,3)", 3);
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.then(&b).image(0), 2);
        assert!(a.compose(&Permutation::identity(4)).is_err());
    }

    #[test]
    fn order_and_cycles() {
        assert_eq!(Permutation::identity(5).order(), 1);
        assert_eq!(p("(1,7,6)(2,4,5,3)(8,9)", 9).order(), 12);
        assert_eq!(p("(2,5)(3,4)", 5).order(), 2);
        assert!(Permutation::identity(3).cycles().is_empty());
        assert_eq!(p("(2 1)(4 3)", 4).cycles(), vec![vec![1, 2], vec![3, 4]]);
        assert_eq!(p("(6,1,7)", 7).cycles(), vec![vec![1, 7, 6]]);
    }

    #[test]
    fn order_matches_repeated_multiplication() {
        let g = p("(1,7,6)(2,4,5,3)(8,9)", 9);
        let mut acc = g.clone();
        let mut m = 1;
        while !acc.is_identity() {
            acc = acc.then(&g);
            m += 1;
        }
        assert_eq!(m, g.order());
    }

    #[test]
    fn display_roundtrip() {
        let g = p("( 1 , 7,6 ) (2,4,5,3)(8 9)", 9);
        assert_eq!(g.to_string(), "(1,7,6)(2,4,5,3)(8,9)");
        assert_eq!(Permutation::identity(4).to_string(), "()");
        assert_eq!(p("()", 4), Permutation::identity(4));
        let q: Permutation = "(1,7,6)(2,4,5,3)(8,9)".parse().unwrap();
        assert_eq!(q, g);
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Permutation::parse_with_degree("(1,2", 3).is_err());
        assert!(Permutation::parse_with_degree("(1,1)", 3).is_err());
        assert!(Permutation::parse_with_degree("(1,5)", 3).is_err());
        assert!(Permutation::parse_with_degree("1,2", 3).is_err());
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }

    #[test]
    fn degree_zero_and_one_are_legal() {
        assert!(Permutation::identity(0).is_identity());
        assert_eq!(Permutation::identity(1).order(), 1);
    }

    #[test]
    fn conjugation_and_powers() {
        let x = p("(1,2,3)", 4);
        let g = p("(3,4)", 4);
        let c = x.conjugate_by(&g);
        assert_eq!(c, g.inverse().then(&x).then(&g));
        assert_eq!(x.pow(3), Permutation::identity(4));
        assert_eq!(x.pow(-1), x.inverse());
    }
}
