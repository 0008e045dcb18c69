use super::classify::check_element;
use super::sequence::is_sop;
use crate::error::{Error, Result};
use crate::homology::PresentedModule;
use crate::kernel::{Polynomial, Rational};

/// `ℓ(M)`, failing for modules of positive dimension.
pub fn length(m: &PresentedModule) -> Result<u64> {
    m.length().finite().ok_or(Error::InfiniteLength(m.dim()))
}

/// Koszul Euler characteristic by `χ(f, g; N) = χ(g; N/fN) - χ(g; 0 :_N f)`.
fn euler_characteristic(m: &PresentedModule, fs: &[Polynomial]) -> Result<i64> {
    if m.is_zero() {
        return Ok(0);
    }
    let Some((f, rest)) = fs.split_first() else {
        return Ok(length(m)? as i64);
    };
    let quotient = m.quotient(std::slice::from_ref(f))?;
    let kernel = m.kernel_module(f)?;
    Ok(euler_characteristic(&quotient, rest)? - euler_characteristic(&kernel, rest)?)
}

/// `e(fs; M)` for a system of parameters `fs`.
pub fn multiplicity(m: &PresentedModule, fs: &[Polynomial]) -> Result<i64> {
    if !is_sop(m, fs)? {
        return Err(Error::NotSop(format_seq(fs)));
    }
    euler_characteristic(m, fs)
}

/// `ℓ(M / (f_1^{n_1}, ..., f_d^{n_d}) M)`.
pub fn power_length(m: &PresentedModule, fs: &[Polynomial], ns: &[u32]) -> Result<u64> {
    if fs.len() != ns.len() || ns.contains(&0) {
        return Err(Error::Inconsistent("one positive exponent per element".into()));
    }
    for f in fs {
        check_element(m, f)?;
    }
    let powers: Vec<Polynomial> = fs.iter().zip(ns).map(|(f, &k)| f.pow(k)).collect();
    length(&m.quotient(&powers)?)
}

/// `I_{M,x}(n) = ℓ(M/(x^n)M) - n_1 ... n_d e(x; M)`.
pub fn i_function(m: &PresentedModule, fs: &[Polynomial], ns: &[u32]) -> Result<i64> {
    let e = multiplicity(m, fs)?;
    let l = power_length(m, fs, ns)? as i64;
    let prod: i64 = ns.iter().map(|&k| k as i64).product();
    Ok(l - prod * e)
}

/// Fits `λ_0..λ_d` in `ℓ(M/(x^n)M) = Σ λ_i n_1...n_i` from the points
/// `(2,..,2,1,..,1)` with `k` leading twos.
pub fn fit_length_formula(m: &PresentedModule, fs: &[Polynomial]) -> Result<Vec<Rational>> {
    let d = fs.len();
    let mut values = Vec::with_capacity(d + 1);
    for k in 0..=d {
        let ns: Vec<u32> = (0..d).map(|i| if i < k { 2 } else { 1 }).collect();
        values.push(Rational::from_int(power_length(m, fs, &ns)? as i64));
    }
    // tails S_k = Σ_{i >= k} λ_i
    let mut tails = vec![Rational::zero(); d + 2];
    tails[0] = values[0].clone();
    for k in 1..=d {
        let step = &values[k] - &values[k - 1];
        tails[k] = &step / &Rational::from_int(1 << (k - 1));
    }
    Ok((0..=d).map(|i| &tails[i] - &tails[i + 1]).collect())
}

/// Evaluates `Σ λ_i n_1...n_i`.
pub fn eval_length_formula(lambdas: &[Rational], ns: &[u32]) -> Rational {
    let mut acc = Rational::zero();
    let mut prod = Rational::one();
    for (i, l) in lambdas.iter().enumerate() {
        if i > 0 {
            prod = &prod * &Rational::from_int(ns[i - 1] as i64);
        }
        acc = &acc + &(l * &prod);
    }
    acc
}

pub(crate) fn format_seq(fs: &[Polynomial]) -> String {
    let parts: Vec<String> = fs.iter().map(|f| f.to_string()).collect();
    format!("({})", parts.join(", "))
}
