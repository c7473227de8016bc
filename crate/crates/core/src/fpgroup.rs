//! Finitely presented quotients of string Coxeter groups and Todd–Coxeter
//! coset enumeration.
//!
//! Every generator is an involution, so the involution relators are built
//! into the coset table: a column is its own inverse column.

use std::fmt;

use crate::error::{Error, Result};
use crate::permcore::Permutation;
use crate::sggi::{check_string, Sggi};

pub const DEFAULT_COSET_CAP: usize = 2_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Entry {
    Finite(u64),
    Infinite,
}

impl Entry {
    /// `"4"` or `"inf"`.
    pub fn parse(s: &str) -> Result<Entry> {
        let s = s.trim();
        if s == "inf" || s == "∞" {
            return Ok(Entry::Infinite);
        }
        match s.parse::<u64>() {
            Ok(p) if p >= 2 => Ok(Entry::Finite(p)),
            _ => Err(Error::BadParameter(format!("Coxeter entry must be an integer >= 2 or inf, got {s:?}"))),
        }
    }

    /// A comma separated list such as `3,4,3`.
    pub fn parse_list(s: &str) -> Result<Vec<Entry>> {
        s.split(',').map(Entry::parse).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    gens: usize,
    relators: Vec<Vec<usize>>,
}

impl Presentation {
    pub fn new(gens: usize) -> Presentation {
        Presentation { gens, relators: Vec::new() }
    }

    pub fn gens(&self) -> usize {
        self.gens
    }

    pub fn relators(&self) -> &[Vec<usize>] {
        &self.relators
    }

    pub fn add_relator(mut self, w: Vec<usize>) -> Result<Presentation> {
        if let Some(&bad) = w.iter().find(|&&x| x >= self.gens) {
            return Err(Error::BadParameter(format!("relator letter {bad} out of range for {} generators", self.gens)));
        }
        if !w.is_empty() {
            self.relators.push(w);
        }
        Ok(self)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn parse(text: &str) -> Result<Presentation> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hl, header) = lines.next().ok_or_else(|| Error::parse(1, "empty presentation"))?;
        let gens = header
            .strip_prefix("gens")
            .and_then(|r| r.trim().parse::<usize>().ok())
            .ok_or_else(|| Error::parse(hl, "expected `gens n`"))?;
        let mut p = Presentation::new(gens);
        for (ln, line) in lines {
            let w = parse_word(line).map_err(|e| Error::parse(ln, e.to_string()))?;
            p = p.add_relator(w).map_err(|e| Error::parse(ln, e.to_string()))?;
        }
        Ok(p)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "gens {}", self.gens)?;
        for r in &self.relators {
            let w: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            writeln!(f, "{}", w.join(" "))?;
        }
        Ok(())
    }
}

/// Space separated generator indices, e.g. `"0 1 0 1"`.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    s.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|_| Error::BadParameter(format!("bad letter {t:?} in word"))))
        .collect()
}

fn power(w: &[usize], e: usize) -> Vec<usize> {
    w.iter().copied().cycle().take(w.len() * e).collect()
}

/// The string Coxeter group with the given Schläfli entries.
pub fn coxeter(entries: &[Entry]) -> Presentation {
    let n = entries.len() + 1;
    let mut p = Presentation::new(n);
    for (i, e) in entries.iter().enumerate() {
        if let Entry::Finite(k) = e {
            p.relators.push(power(&[i, i + 1], *k as usize));
        }
    }
    for i in 0..n {
        for j in i + 2..n {
            p.relators.push(vec![i, j, i, j]);
        }
    }
    p
}

/// Relators of both presentations on shared generators, duplicates dropped.
pub fn comix_presentation(a: &Presentation, b: &Presentation) -> Result<Presentation> {
    if a.gens != b.gens {
        return Err(Error::RankMismatch { left: a.gens, right: b.gens });
    }
    let mut p = a.clone();
    for r in &b.relators {
        if !p.relators.contains(r) {
            p.relators.push(r.clone());
        }
    }
    Ok(p)
}

/// `[4,4]` with `(ρ0ρ1ρ2ρ1)^s`, which presents `{4,4}_(s,0)`.
pub fn torus44_presentation(s: usize) -> Presentation {
    let mut p = coxeter(&[Entry::Finite(4), Entry::Finite(4)]);
    p.relators.push(power(&[0, 1, 2, 1], s));
    p
}

/// `[∞,∞]` with `(ρ0ρ2ρ1)^6 ρ_i (ρ1ρ2ρ0)^6 ρ_{2-i}` for `i = 0, 1, 2`.
pub fn dualizing_quotient_presentation() -> Presentation {
    let mut p = coxeter(&[Entry::Infinite, Entry::Infinite]);
    let w6 = power(&[0, 2, 1], 6);
    let w6_inv = power(&[1, 2, 0], 6);
    for i in 0..3 {
        let mut r = w6.clone();
        r.push(i);
        r.extend(&w6_inv);
        r.push(2 - i);
        p.relators.push(r);
    }
    p
}

/// Generator actions on the cosets of the enumerated subgroup (coset 0 is the subgroup).
#[derive(Debug, Clone)]
pub struct CosetTable {
    pub cosets: usize,
    pub gens: Vec<Permutation>,
}

impl CosetTable {
    pub fn evaluate(&self, w: &[usize]) -> Permutation {
        w.iter().fold(Permutation::identity(self.cosets), |acc, &i| acc.then(&self.gens[i]))
    }
}

const NONE: u32 = u32::MAX;

struct Enumerator {
    n: usize,
    table: Vec<u32>,
    parent: Vec<u32>,
    cap: usize,
    queue: Vec<u32>,
}

impl Enumerator {
    fn get(&self, c: u32, x: usize) -> u32 {
        self.table[c as usize * self.n + x]
    }

    fn set(&mut self, c: u32, x: usize, d: u32) {
        self.table[c as usize * self.n + x] = d;
    }

    fn live(&self, c: u32) -> bool {
        self.parent[c as usize] == c
    }

    fn define(&mut self, c: u32, x: usize) -> Result<u32> {
        let d = self.parent.len();
        if d >= self.cap {
            return Err(Error::CapExceeded { cap: self.cap });
        }
        let d = d as u32;
        self.parent.push(d);
        self.table.extend(std::iter::repeat_n(NONE, self.n));
        self.set(c, x, d);
        self.set(d, x, c);
        Ok(d)
    }

    fn rep(&mut self, c: u32) -> u32 {
        let mut r = c;
        while self.parent[r as usize] != r {
            r = self.parent[r as usize];
        }
        let mut c = c;
        while self.parent[c as usize] != r {
            let next = self.parent[c as usize];
            self.parent[c as usize] = r;
            c = next;
        }
        r
    }

    fn merge(&mut self, a: u32, b: u32) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        self.parent[hi as usize] = lo;
        self.queue.push(hi);
    }

    fn coincidence(&mut self, a: u32, b: u32) {
        self.queue.clear();
        self.merge(a, b);
        let mut i = 0;
        while i < self.queue.len() {
            let e = self.queue[i];
            i += 1;
            for x in 0..self.n {
                let f = self.get(e, x);
                if f == NONE {
                    continue;
                }
                self.set(f, x, NONE);
                let e1 = self.rep(e);
                let f1 = self.rep(f);
                let ex = self.get(e1, x);
                let fx = self.get(f1, x);
                if ex != NONE {
                    self.merge(f1, ex);
                } else if fx != NONE {
                    self.merge(e1, fx);
                } else {
                    self.set(e1, x, f1);
                    self.set(f1, x, e1);
                }
            }
        }
    }

    fn scan_and_fill(&mut self, c: u32, w: &[usize]) -> Result<()> {
        if w.is_empty() {
            return Ok(());
        }
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, w.len() as isize - 1);
        loop {
            while (i as isize) <= j && self.get(f, w[i]) != NONE {
                f = self.get(f, w[i]);
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b);
                }
                return Ok(());
            }
            while j >= i as isize && self.get(b, w[j as usize]) != NONE {
                b = self.get(b, w[j as usize]);
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b);
                return Ok(());
            }
            if j == i as isize {
                self.set(f, w[i], b);
                self.set(b, w[i], f);
                return Ok(());
            }
            self.define(f, w[i])?;
        }
    }
}

/// HLT enumeration of the cosets of `⟨subgroup⟩`. Cosets are processed lowest
/// live number first, so the table is reproducible.
pub fn todd_coxeter(p: &Presentation, subgroup: &[Vec<usize>], cap: usize) -> Result<CosetTable> {
    let n = p.gens;
    let mut e = Enumerator { n, table: vec![NONE; n], parent: vec![0], cap: cap.max(1), queue: Vec::new() };
    for w in subgroup {
        e.scan_and_fill(0, w)?;
    }
    let mut c = 0u32;
    while (c as usize) < e.parent.len() {
        if e.live(c) {
            for r in &p.relators {
                e.scan_and_fill(c, r)?;
                if !e.live(c) {
                    break;
                }
            }
            if e.live(c) {
                for x in 0..n {
                    if e.get(c, x) == NONE {
                        e.define(c, x)?;
                    }
                }
            }
        }
        c += 1;
    }

    let mut index = vec![NONE; e.parent.len()];
    let mut count = 0u32;
    for c in 0..e.parent.len() as u32 {
        if e.live(c) {
            index[c as usize] = count;
            count += 1;
        }
    }
    let live: Vec<u32> = (0..e.parent.len() as u32).filter(|&c| e.live(c)).collect();
    let gens = (0..n)
        .map(|x| {
            let images = live.iter().map(|&c| index[e.get(c, x) as usize] as usize).collect();
            Permutation::from_images(images)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(CosetTable { cosets: count as usize, gens })
}

/// Order of the presented group by enumerating the trivial subgroup.
pub fn group_order(p: &Presentation, cap: usize) -> Result<usize> {
    Ok(todd_coxeter(p, &[], cap)?.cosets)
}

/// The regular representation as an sggi. Fails when a generator collapses.
pub fn to_sggi(p: &Presentation, cap: usize) -> Result<Sggi> {
    check_string(todd_coxeter(p, &[], cap)?.gens)
}

/// Whether killing `ρ_m, …, ρ_{n-1}` leaves a group of exactly `facet_group_order`.
pub fn check_fap(p: &Presentation, m: usize, facet_group_order: usize, cap: usize) -> Result<bool> {
    if m > p.gens {
        return Err(Error::BadParameter(format!("m = {m} exceeds the rank {}", p.gens)));
    }
    let mut q = p.clone();
    for i in m..p.gens {
        q = q.add_relator(vec![i])?;
    }
    Ok(group_order(&q, cap)? == facet_group_order)
}
