//! Hilbert series of graded quotients `F/N`, read off the initial module.

use std::fmt;

use crate::kernel::Monomial;

/// Length of a graded module.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Length {
    Finite(u64),
    Infinite,
}

impl Length {
    pub fn finite(self) -> Option<u64> {
        match self {
            Length::Finite(l) => Some(l),
            Length::Infinite => None,
        }
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(l) => write!(f, "{l}"),
            Length::Infinite => f.write_str("infinite"),
        }
    }
}

/// `t^shift * N(t) / (1 - t)^n` with integer numerator coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertSeries {
    nvars: usize,
    shift: i64,
    num: Vec<i64>,
}

impl HilbertSeries {
    pub fn zero(nvars: usize) -> Self {
        HilbertSeries { nvars, shift: 0, num: Vec::new() }
    }

    /// Series of `⊕ S(-twist_i)/J_i` where `J_i` are monomial ideals.
    pub fn of_quotient(nvars: usize, parts: &[(i64, Vec<Monomial>)]) -> Self {
        let mut acc = HilbertSeries::zero(nvars);
        for (twist, gens) in parts {
            let n = numerator(gens.clone());
            acc = acc.add(&HilbertSeries::from_numerator(nvars, *twist, n));
        }
        acc
    }

    fn from_numerator(nvars: usize, shift: i64, num: Vec<i64>) -> Self {
        let mut h = HilbertSeries { nvars, shift, num };
        h.normalize();
        h
    }

    fn normalize(&mut self) {
        while self.num.last() == Some(&0) {
            self.num.pop();
        }
        let lead = self.num.iter().take_while(|&&c| c == 0).count();
        if lead == self.num.len() {
            self.num.clear();
            self.shift = 0;
        } else if lead > 0 {
            self.num.drain(..lead);
            self.shift += lead as i64;
        }
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &HilbertSeries) -> HilbertSeries {
        self.combine(other, -1)
    }

    fn combine(&self, other: &HilbertSeries, sign: i64) -> HilbertSeries {
        debug_assert_eq!(self.nvars, other.nvars);
        if other.num.is_empty() {
            return self.clone();
        }
        if self.num.is_empty() {
            let mut o = other.clone();
            o.num.iter_mut().for_each(|c| *c *= sign);
            return o;
        }
        let lo = self.shift.min(other.shift);
        let hi = (self.shift + self.num.len() as i64).max(other.shift + other.num.len() as i64);
        let mut num = vec![0i64; (hi - lo) as usize];
        for (k, c) in self.num.iter().enumerate() {
            num[(self.shift - lo) as usize + k] += c;
        }
        for (k, c) in other.num.iter().enumerate() {
            num[(other.shift - lo) as usize + k] += sign * c;
        }
        HilbertSeries::from_numerator(self.nvars, lo, num)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// Numerator as `(shift, coefficients)`.
    pub fn numerator(&self) -> (i64, &[i64]) {
        (self.shift, &self.num)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    /// `(m, Q)` with `N = (1-t)^m Q` and `Q(1) != 0`.
    fn reduced(&self) -> (usize, Vec<i64>) {
        let mut q = self.num.clone();
        let mut m = 0;
        while !q.is_empty() && q.iter().sum::<i64>() == 0 {
            // synthetic division by (1 - t), i.e. by -(t - 1)
            let mut out = vec![0i64; q.len() - 1];
            let mut carry = 0i64;
            for k in 0..q.len() - 1 {
                carry += q[k];
                out[k] = carry;
            }
            q = out;
            m += 1;
        }
        (m, q)
    }

    /// Krull dimension; `-1` for the zero module.
    pub fn dimension(&self) -> i64 {
        if self.num.is_empty() {
            return -1;
        }
        self.nvars as i64 - self.reduced().0 as i64
    }

    /// Leading coefficient of the Hilbert polynomial times `(dim-1)!`,
    /// i.e. `Q(1)`; zero for the zero module.
    pub fn multiplicity(&self) -> i64 {
        if self.num.is_empty() {
            return 0;
        }
        self.reduced().1.iter().sum()
    }

    pub fn length(&self) -> Length {
        match self.dimension() {
            -1 => Length::Finite(0),
            0 => Length::Finite(self.multiplicity() as u64),
            _ => Length::Infinite,
        }
    }

    /// Dimension of the degree-`k` graded piece.
    pub fn value(&self, k: i64) -> i64 {
        let n = self.nvars as i64;
        let mut total = 0i64;
        for (j, c) in self.num.iter().enumerate() {
            let r = k - self.shift - j as i64;
            if r < 0 {
                continue;
            }
            total += c * binom(r + n - 1, n - 1);
        }
        total
    }
}

fn binom(a: i64, b: i64) -> i64 {
    if b < 0 || a < b {
        return 0;
    }
    let b = b.min(a - b);
    let mut r: i128 = 1;
    for i in 0..b {
        r = r * (a - i) as i128 / (i + 1) as i128;
    }
    r as i64
}

fn minimize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.push(g);
        }
    }
    out
}

fn mul_poly(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Numerator `N(t)` of `HS(S/J) = N(t)/(1-t)^n` by pivot recursion
/// `N(J) = N(J + p) + t^deg(p) N(J : p)`.
pub(crate) fn numerator(gens: Vec<Monomial>) -> Vec<i64> {
    let gens = minimize(gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|g| g.is_one()) {
        return Vec::new();
    }
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, a)| gens[i + 1..].iter().all(|b| a.coprime(b)));
    if coprime {
        let mut acc = vec![1i64];
        for g in &gens {
            let mut f = vec![0i64; g.degree() as usize + 1];
            f[0] = 1;
            f[g.degree() as usize] -= 1;
            acc = mul_poly(&acc, &f);
        }
        return acc;
    }
    // pivot on the variable occurring most often among mixed generators
    let n = gens[0].nvars();
    let mut count = vec![0usize; n];
    for g in &gens {
        if g.support().count() > 1 {
            for v in g.support() {
                count[v] += 1;
            }
        }
    }
    let v = (0..n).max_by_key(|&v| (count[v], std::cmp::Reverse(v))).unwrap();
    let e = gens.iter().map(|g| g.exp(v)).filter(|&e| e > 0).min().unwrap();
    let p = Monomial::one(n).with_exp(v, e);

    let mut plus = gens.clone();
    plus.push(p.clone());
    let colon: Vec<Monomial> = gens.iter().map(|g| p.quotient_of(&g.lcm(&p))).collect();
    let a = numerator(plus);
    let b = numerator(colon);
    let mut out = vec![0i64; a.len().max(b.len() + e as usize)];
    for (k, c) in a.iter().enumerate() {
        out[k] += c;
    }
    for (k, c) in b.iter().enumerate() {
        out[k + e as usize] += c;
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}
