//! Test-side oracles, independent of the Gröbner engine: dense rank
//! computations over Q and simplicial homology of links.
#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;

use seqcm_core::{Monomial, MonomialIdeal, Polynomial, PresentedModule, Rational, Ring};

pub fn ideal(names: &[&str], gens: &[&str]) -> MonomialIdeal {
    let r = Ring::new(names).unwrap();
    let ps: Vec<Polynomial> = gens.iter().map(|g| Polynomial::parse(&r, g).unwrap()).collect();
    MonomialIdeal::from_polynomials(&r, &ps).unwrap()
}

/// Two planes meeting in a line, five variables.
pub fn fix_c() -> MonomialIdeal {
    ideal(&["x", "y", "z", "t", "w"], &["x*z", "x*t", "y*z", "y*t"])
}

/// Plane, line and embedded point.
pub fn fix_d() -> MonomialIdeal {
    ideal(&["x", "y", "z"], &["x^2*y", "x*y^2", "x*z"])
}

/// Embedded component along `(x,y)`, four variables.
pub fn fix_e() -> MonomialIdeal {
    ideal(&["x", "y", "z", "t"], &["x^2*y", "x*y^2"])
}

/// Two planes meeting in a point.
pub fn fix_g() -> MonomialIdeal {
    ideal(&["x", "y", "z", "t"], &["x*z", "x*t", "y*z", "y*t"])
}

pub fn fixtures() -> Vec<(&'static str, MonomialIdeal)> {
    vec![("C", fix_c()), ("D", fix_d()), ("E", fix_e()), ("G", fix_g())]
}

pub fn poly(ring: &Arc<Ring>, s: &str) -> Polynomial {
    Polynomial::parse(ring, s).unwrap()
}

/// Monomial ideal with up to `max_gens` random generators of degree `1..=max_deg`.
pub fn random_monomial_ideal(rng: &mut impl Rng, n: usize, max_gens: usize, max_deg: u32) -> MonomialIdeal {
    const NAMES: [&str; 6] = ["a", "b", "c", "d", "e", "f"];
    let ring = Ring::new(&NAMES[..n]).unwrap();
    let count = rng.gen_range(1..=max_gens);
    let gens = (0..count)
        .map(|_| {
            let deg = rng.gen_range(1..=max_deg);
            let mut e = vec![0u16; n];
            for _ in 0..deg {
                e[rng.gen_range(0..n)] += 1;
            }
            Monomial::new(&e)
        })
        .collect();
    MonomialIdeal::new(&ring, gens)
}

fn q(r: &Rational) -> BigRational {
    r.to_string().parse().expect("rational literal")
}

/// Reduced row echelon form; returns the nonzero rows and pivot columns.
pub fn rref(mut rows: Vec<Vec<BigRational>>) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = BigRational::one() / rows[r][c].clone();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for k in 0..ncols {
                    let d = &f * &rows[r][k];
                    rows[i][k] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(rows: Vec<Vec<BigRational>>) -> usize {
    rref(rows).1.len()
}

/// Basis of `{x : A x = 0}` for `A` with `ncols` columns.
pub fn nullspace(rows: Vec<Vec<BigRational>>, ncols: usize) -> Vec<Vec<BigRational>> {
    let (red, pivots) = rref(rows);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); ncols];
            v[f] = BigRational::one();
            for (row, &p) in red.iter().zip(&pivots) {
                v[p] = -row[f].clone();
            }
            v
        })
        .collect()
}

/// Basis of the intersection of two subspaces given by spanning sets.
pub fn intersect(a: &[Vec<BigRational>], b: &[Vec<BigRational>], dim: usize) -> Vec<Vec<BigRational>> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // solve sum s_i a_i - sum t_j b_j = 0
    let cols = a.len() + b.len();
    let rows: Vec<Vec<BigRational>> = (0..dim)
        .map(|k| a.iter().map(|v| v[k].clone()).chain(b.iter().map(|v| -v[k].clone())).collect())
        .collect();
    let sols = nullspace(rows, cols);
    let span: Vec<Vec<BigRational>> = sols
        .iter()
        .map(|s| {
            let mut v = vec![BigRational::zero(); dim];
            for (i, ai) in a.iter().enumerate() {
                for k in 0..dim {
                    v[k] += &s[i] * &ai[k];
                }
            }
            v
        })
        .collect();
    rref(span).0
}

pub fn monomials(n: usize, deg: i64) -> Vec<Vec<u16>> {
    if deg < 0 {
        return Vec::new();
    }
    if n == 0 {
        return if deg == 0 { vec![Vec::new()] } else { Vec::new() };
    }
    let mut out = Vec::new();
    for e in (0..=deg).rev() {
        for mut rest in monomials(n - 1, deg - e) {
            rest.insert(0, e as u16);
            out.push(rest);
        }
    }
    out
}

/// `dim_Q M_t` as `dim F_t - rank` of the span of all monomial multiples of
/// the relations landing in degree `t`.
pub fn dense_hilbert_value(m: &PresentedModule, t: i64) -> i64 {
    let n = m.ring().nvars();
    let twists = m.target().twists().to_vec();
    let mut index: HashMap<(usize, Vec<u16>), usize> = HashMap::new();
    for (pos, &tw) in twists.iter().enumerate() {
        for mono in monomials(n, t - tw as i64) {
            let k = index.len();
            index.insert((pos, mono), k);
        }
    }
    let size = index.len();
    let mut rows = Vec::new();
    for g in m.relations().generators() {
        let Some(dg) = g.degree() else { continue };
        for mono in monomials(n, t - dg) {
            let mut row = vec![BigRational::zero(); size];
            for term in g.terms() {
                let e: Vec<u16> = term.mono.exps().iter().zip(&mono).map(|(a, b)| a + b).collect();
                row[index[&(term.pos, e)]] += q(&term.coeff);
            }
            rows.push(row);
        }
    }
    size as i64 - rank(rows) as i64
}

/// Simplicial complex on `0..n` given by its faces as bit masks.
struct Complex {
    faces: BTreeSet<u32>,
}

impl Complex {
    fn faces_of_size(&self, k: u32) -> Vec<u32> {
        self.faces.iter().copied().filter(|f| f.count_ones() == k).collect()
    }

    /// Matrix of the boundary `C_q -> C_{q-1}` as rows indexed by `(q-1)`-faces.
    fn boundary(&self, q: i64) -> (Vec<u32>, Vec<u32>, Vec<Vec<BigRational>>) {
        let top = self.faces_of_size((q + 1) as u32);
        let low = if q >= 0 { self.faces_of_size(q as u32) } else { Vec::new() };
        let mut rows = vec![vec![BigRational::zero(); top.len()]; low.len()];
        for (j, &f) in top.iter().enumerate() {
            let verts: Vec<u32> = (0..32).filter(|v| f >> v & 1 == 1).collect();
            for (i, v) in verts.iter().enumerate() {
                let face = f & !(1 << v);
                let r = low.iter().position(|&g| g == face).expect("closed under subsets");
                let sign = if i % 2 == 0 { 1 } else { -1 };
                rows[r][j] += BigRational::from_integer(sign.into());
            }
        }
        (top, low, rows)
    }

    /// True when some class of `H~_q` lies in the image of `H~_q(del v)` for
    /// every vertex `v` of `vertices`.
    fn common_deletion_class(&self, q: i64, vertices: u32) -> bool {
        if q < -1 {
            return false;
        }
        let (faces, _, d) = self.boundary(q);
        let dim = faces.len();
        if dim == 0 {
            return false;
        }
        let cycles = nullspace(d, dim);
        let (_, _, up) = self.boundary(q + 1);
        let boundaries: Vec<Vec<BigRational>> = {
            let cols = up.first().map_or(0, |r| r.len());
            rref((0..cols).map(|c| up.iter().map(|row| row[c].clone()).collect()).collect()).0
        };
        let mut common = rref(cycles).0;
        for v in (0..32).filter(|v| vertices >> v & 1 == 1) {
            // cycles supported away from v, plus boundaries
            let keep: Vec<usize> = (0..dim).filter(|&k| faces[k] >> v & 1 == 0).collect();
            let (_, _, dv) = self.boundary(q);
            let restricted: Vec<Vec<BigRational>> =
                dv.iter().map(|row| keep.iter().map(|&k| row[k].clone()).collect()).collect();
            let mut span: Vec<Vec<BigRational>> = nullspace(restricted, keep.len())
                .into_iter()
                .map(|z| {
                    let mut full = vec![BigRational::zero(); dim];
                    for (i, &k) in keep.iter().enumerate() {
                        full[k] = z[i].clone();
                    }
                    full
                })
                .collect();
            span.extend(boundaries.iter().cloned());
            let span = rref(span).0;
            common = intersect(&common, &span, dim);
        }
        common.len() > boundaries.len()
    }
}

fn mask_monomial(n: usize, mask: u32) -> Monomial {
    let e: Vec<u16> = (0..n).map(|v| (mask >> v & 1) as u16).collect();
    Monomial::new(&e)
}

/// `Att H^i_m(S/I)` for a squarefree `I`, `0 <= i <= dim`, as sorted lists of
/// variable indices. Localizing at `x_F` reduces membership of `P_F` to the
/// maximal ideal being associated to the top-degree part of a deficiency
/// module of the link of `F`, where multiplication by `x_v` is the map
/// `H~(lk F) -> H~(lk F, del v)`.
pub fn hochster_att(ideal: &MonomialIdeal) -> Vec<BTreeSet<Vec<usize>>> {
    assert!(ideal.is_squarefree());
    let n = ideal.nvars();
    let all = (1u32 << n) - 1;
    let delta: BTreeSet<u32> = (0..=all).filter(|&m| !ideal.contains(&mask_monomial(n, m))).collect();
    let d = delta.iter().map(|f| f.count_ones()).max().expect("proper ideal") as usize;
    let mut att = vec![BTreeSet::new(); d + 1];
    for &f in &delta {
        let link = Complex { faces: delta.iter().copied().filter(|&g| g & f == 0 && delta.contains(&(g | f))).collect() };
        let size = f.count_ones() as usize;
        for i in size..=d {
            if link.common_deletion_class(i as i64 - size as i64 - 1, all & !f) {
                att[i].insert((0..n).filter(|v| f >> v & 1 == 0).collect());
            }
        }
    }
    att
}
