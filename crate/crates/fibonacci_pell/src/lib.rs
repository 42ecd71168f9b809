//! Odd star-Fibonacci polynomials `F_{2n+1}` and odd star-Pell polynomials `P_{2n+1}`.
//!
//! `F_1 = s1`, `F_3 = s1^2 - s2`, `F_{2n+3} = g_n F_{2n+1} - s3 F_{2n-1}` with `g_n = s2` for odd
//! `n` and `s1` for even `n`.
//! `P_1 = s2`, `P_3 = s1^2 s2 - s1 s3 - s2^2`, `P_{2n+3} = h_n P_{2n+1} - s3^2 P_{2n-1}` with
//! `h_n = s2^2 - s1 s3` for odd `n` and `s1^2 - s2` for even `n`.

mod binet;

use laurent_core::{lp, BigInt, Exponent, LaurentPoly};
use num_integer::binomial;
use num_traits::{One, Zero};

pub use binet::{binet_fib, ratio_limits, BinetReport};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FibError {
    #[error("index {0} is not a positive odd integer")]
    BadIndex(i64),
    #[error("n must be at least {min}, got {n}")]
    TooSmall { n: i64, min: i64 },
    #[error("{0}")]
    Binet(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Fibonacci,
    Pell,
}

/// `g_n`: `s2` for odd `n`, `s1` for even `n` (any sign of `n`).
pub fn g(n: i64) -> LaurentPoly {
    if n.rem_euclid(2) == 1 {
        LaurentPoly::s2()
    } else {
        LaurentPoly::s1()
    }
}

/// `h_n`: `s2^2 - s1 s3` for odd `n`, `s1^2 - s2` for even `n`.
pub fn h(n: i64) -> LaurentPoly {
    if n.rem_euclid(2) == 1 {
        lp("s2^2 - s1*s3")
    } else {
        lp("s1^2 - s2")
    }
}

/// `F_{2n+1}`. Negative `n` runs the recurrence backwards, `F_{2n-1} = (g_n F_{2n+1} - F_{2n+3}) / s3`.
pub fn star_fibonacci(n: i64) -> LaurentPoly {
    fibonacci_range(n.min(0), n.max(1)).remove(&n).expect("index in range")
}

/// `F_{2k+1}` for `lo <= k <= hi`, keyed by `k`. Requires `lo <= 0 < hi`.
fn fibonacci_range(lo: i64, hi: i64) -> std::collections::BTreeMap<i64, LaurentPoly> {
    let mut out = std::collections::BTreeMap::new();
    out.insert(0, LaurentPoly::s1());
    out.insert(1, lp("s1^2 - s2"));
    for k in 1..hi {
        let next = &g(k) * &out[&k] - out[&(k - 1)].shift_s3(1);
        out.insert(k + 1, next);
    }
    for k in (lo..0).rev() {
        // F_{2k+1} = (g_{k+1} F_{2k+3} - F_{2k+5}) / s3
        let prev = (&g(k + 1) * &out[&(k + 1)] - out[&(k + 2)].clone()).shift_s3(-1);
        out.insert(k, prev);
    }
    out
}

/// `F_1, F_3, ..., F_{2m+1}`.
pub fn fibonacci_sequence(m: usize) -> Vec<LaurentPoly> {
    fibonacci_range(0, m.max(1) as i64).into_values().take(m + 1).collect()
}

/// `P_{2n+1}` for `n >= 0`.
pub fn star_pell(n: u32) -> LaurentPoly {
    pell_sequence(n as usize).pop().unwrap()
}

/// `P_1, P_3, ..., P_{2m+1}`.
pub fn pell_sequence(m: usize) -> Vec<LaurentPoly> {
    let mut out = vec![lp("s2"), lp("s1^2*s2 - s1*s3 - s2^2")];
    for k in 1..m {
        let next = &h(k as i64) * &out[k] - out[k - 1].shift_s3(2);
        out.push(next);
    }
    out.truncate(m + 1);
    out
}

fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < k {
        BigInt::zero()
    } else {
        binomial(BigInt::from(n), BigInt::from(k))
    }
}

fn mono(a1: i64, a2: i64, a3: i64) -> LaurentPoly {
    LaurentPoly::monomial(Exponent::new(a1 as u32, a2 as u32, a3 as i32), 1)
}

fn signed(i: i64) -> BigInt {
    if i % 2 == 0 {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Closed binomial formula for `F_{4n+1}`.
pub fn fib_closed_4n1(n: i64) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for i in 0..=n {
        out = out + mono(1 + n - i, n - i, i).scale(&(binom(2 * n - i, i) * signed(i)));
    }
    for i in 0..n {
        out = out - mono(n - 1 - i, n - i + 1, i).scale(&(binom(2 * n - 1 - i, i) * signed(i)));
    }
    out
}

/// Closed binomial formula for `F_{4n+3}`.
pub fn fib_closed_4n3(n: i64) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for i in 0..=n {
        out = out + mono(n + 2 - i, n - i, i).scale(&(binom(2 * n + 1 - i, i) * signed(i)));
        out = out - mono(n - i, n - i + 1, i).scale(&(binom(2 * n - i, i) * signed(i)));
    }
    out
}

/// `F_index` from the closed formulas; `index` must be a positive odd integer.
pub fn star_fibonacci_closed(index: i64) -> Result<LaurentPoly, FibError> {
    match index.checked_rem_euclid(4) {
        Some(1) if index > 0 => Ok(fib_closed_4n1((index - 1) / 4)),
        Some(3) if index > 0 => Ok(fib_closed_4n3((index - 3) / 4)),
        _ => Err(FibError::BadIndex(index)),
    }
}

/// `P_index` from the closed formulas; `index` must be a positive odd integer.
pub fn pell_closed(index: i64) -> Result<LaurentPoly, FibError> {
    let h0h1 = &h(0) * &h(1);
    let mut out = LaurentPoly::zero();
    match index.checked_rem_euclid(4) {
        Some(1) if index > 0 => {
            let n = (index - 1) / 4;
            for i in 0..=n {
                let t = &LaurentPoly::s2() * &h0h1.pow((n - i) as u32);
                out = out + t.shift_s3(2 * i as i32).scale(&(binom(2 * n - i, i) * signed(i)));
            }
            for i in 0..n {
                let t = &(&LaurentPoly::s1() * &h(1)) * &h0h1.pow((n - i - 1) as u32);
                out = out - t.shift_s3(2 * i as i32 + 1).scale(&(binom(2 * n - 1 - i, i) * signed(i)));
            }
        }
        Some(3) if index > 0 => {
            let n = (index - 3) / 4;
            for i in 0..=n {
                let a = &(&LaurentPoly::s2() * &h(0)) * &h0h1.pow((n - i) as u32);
                out = out + a.shift_s3(2 * i as i32).scale(&(binom(2 * n + 1 - i, i) * signed(i)));
                let b = &LaurentPoly::s1() * &h0h1.pow((n - i) as u32);
                out = out - b.shift_s3(2 * i as i32 + 1).scale(&(binom(2 * n - i, i) * signed(i)));
            }
        }
        _ => return Err(FibError::BadIndex(index)),
    }
    Ok(out)
}

/// Power series coefficients `c_0..c_upto` of `num(t)/den(t)`, where `den(0) = +-1`.
/// Each coefficient follows from the linear recurrence read off `den`.
pub fn series_coefficients(num: &[LaurentPoly], den: &[LaurentPoly], upto: usize) -> Vec<LaurentPoly> {
    let d0 = &den[0];
    let sign = if d0.is_one() {
        BigInt::one()
    } else if *d0 == LaurentPoly::constant(-1) {
        -BigInt::one()
    } else {
        panic!("constant term of the denominator must be a unit");
    };
    let mut c: Vec<LaurentPoly> = Vec::with_capacity(upto + 1);
    for k in 0..=upto {
        let mut acc = num.get(k).cloned().unwrap_or_else(LaurentPoly::zero);
        for j in 1..=k.min(den.len() - 1) {
            if !den[j].is_zero() {
                acc = acc - &den[j] * &c[k - j];
            }
        }
        c.push(acc.scale(&sign));
    }
    c
}

fn coeff_list(pairs: &[(usize, &str)], len: usize) -> Vec<LaurentPoly> {
    let mut v = vec![LaurentPoly::zero(); len];
    for &(k, s) in pairs {
        v[k] = lp(s);
    }
    v
}

/// Numerator and denominator of the Fibonacci generating function, as coefficient lists in `t`.
pub fn fib_genfun() -> (Vec<LaurentPoly>, Vec<LaurentPoly>) {
    (
        coeff_list(&[(1, "-s1"), (3, "s2 - s1^2"), (5, "s2^2 - s1*s3"), (7, "s2*s3")], 8),
        coeff_list(&[(0, "-1"), (4, "s1*s2 - 2*s3"), (8, "-s3^2")], 9),
    )
}

/// Numerator and denominator of the Pell generating function.
pub fn pell_genfun() -> (Vec<LaurentPoly>, Vec<LaurentPoly>) {
    (
        coeff_list(
            &[(1, "s2"), (3, "(s1^2 - s2)*s2 - s1*s3"), (5, "(s1^2 + s2)*s3^2 - s1*s2^2*s3"), (7, "-s1*s3^3")],
            8,
        ),
        coeff_list(&[(0, "1"), (4, "s1^3*s3 - s1*s2*s3 + s2^3 - s1^2*s2^2 + 2*s3^2"), (8, "s3^4")], 9),
    )
}

fn genfun_coeff(family: Family, k: i64) -> Result<LaurentPoly, FibError> {
    if k <= 0 || k % 2 == 0 {
        return Err(FibError::BadIndex(k));
    }
    let (num, den) = match family {
        Family::Fibonacci => fib_genfun(),
        Family::Pell => pell_genfun(),
    };
    Ok(series_coefficients(&num, &den, k as usize).pop().unwrap())
}

/// Coefficient of `t^k` in the Fibonacci generating function.
pub fn fib_genfun_coeff(k: i64) -> Result<LaurentPoly, FibError> {
    genfun_coeff(Family::Fibonacci, k)
}

/// Coefficient of `t^k` in the Pell generating function.
pub fn pell_genfun_coeff(k: i64) -> Result<LaurentPoly, FibError> {
    genfun_coeff(Family::Pell, k)
}

/// `s1^3 s3 + s2^3 - s1^2 s2^2`.
pub fn fib_cassini_constant() -> LaurentPoly {
    lp("s1^3*s3 + s2^3 - s1^2*s2^2")
}

/// `(s1^2 - s2) s2^2 s3 - s1 (s2^2 - s1 s3)((s1^2 - s2) s2 - s1 s3)`.
pub fn pell_cassini_constant() -> LaurentPoly {
    lp("(s1^2 - s2)*s2^2*s3 - s1*(s2^2 - s1*s3)*((s1^2 - s2)*s2 - s1*s3)")
}

/// `g_n F_{2n+1}^2 - g_{n-1} F_{2n+3} F_{2n-1}`, which equals `s3^(n-1)` times the Cassini constant.
pub fn cassini_fib(n: i64) -> Result<LaurentPoly, FibError> {
    if n < 1 {
        return Err(FibError::TooSmall { n, min: 1 });
    }
    let f = fibonacci_range(0, n + 1);
    Ok(&g(n) * &f[&n].pow(2) - &(&g(n - 1) * &f[&(n + 1)]) * &f[&(n - 1)])
}

/// `h_n P_{2n+1}^2 - h_{n-1} P_{2n+3} P_{2n-1}`, which equals `s3^(2n-1)` times the Pell Cassini constant.
pub fn cassini_pell(n: i64) -> Result<LaurentPoly, FibError> {
    if n < 1 {
        return Err(FibError::TooSmall { n, min: 1 });
    }
    let p = pell_sequence(n as usize + 1);
    let n_ = n as usize;
    Ok(&h(n) * &p[n_].pow(2) - &(&h(n - 1) * &p[n_ + 1]) * &p[n_ - 1])
}

/// A terminating continued fraction `a0 + b1/(a1 + b2/(a2 + ...))`.
#[derive(Clone, Debug, PartialEq)]
pub struct ContinuedFraction {
    pub a0: LaurentPoly,
    /// Pairs `(b_i, a_i)`.
    pub tail: Vec<(LaurentPoly, LaurentPoly)>,
}

impl ContinuedFraction {
    /// Value as an unreduced fraction `(numerator, denominator)`, evaluated from the bottom.
    pub fn fraction(&self) -> (LaurentPoly, LaurentPoly) {
        let mut levels: Vec<&LaurentPoly> = vec![&self.a0];
        levels.extend(self.tail.iter().map(|(_, a)| a));
        let mut p = levels[levels.len() - 1].clone();
        let mut q = LaurentPoly::one();
        for j in (0..levels.len() - 1).rev() {
            let b = &self.tail[j].0;
            let next = levels[j] * &p + b * &q;
            q = p;
            p = next;
        }
        (p, q)
    }

    /// `num/den` equals the value, tested by cross-multiplication.
    pub fn equals_ratio(&self, num: &LaurentPoly, den: &LaurentPoly) -> bool {
        let (p, q) = self.fraction();
        &p * den == &q * num
    }
}

fn wrap(f: &LaurentPoly) -> String {
    if f.len() > 1 {
        format!("({f})")
    } else {
        f.to_string()
    }
}

impl std::fmt::Display for ContinuedFraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        fn rest(tail: &[(LaurentPoly, LaurentPoly)]) -> String {
            match tail.split_first() {
                None => String::new(),
                Some(((b, a), more)) => {
                    let inner = if more.is_empty() { wrap(a) } else { format!("({}{})", wrap(a), rest(more)) };
                    let (sign, mag) = match b.leading_term() {
                        Some((_, c)) if c < &BigInt::zero() => (" - ", -b.clone()),
                        _ => (" + ", b.clone()),
                    };
                    format!("{sign}{}/{inner}", wrap(&mag))
                }
            }
        }
        write!(f, "{}{}", wrap(&self.a0), rest(&self.tail))
    }
}

/// `[g_n; -s3/g_{n-1}, ..., -s3/g_0, -s2/s1]`, equal to `F_{2n+3}/F_{2n+1}`.
pub fn cf_convergent_fib(n: i64) -> Result<ContinuedFraction, FibError> {
    if n < 1 {
        return Err(FibError::TooSmall { n, min: 1 });
    }
    let mut tail: Vec<(LaurentPoly, LaurentPoly)> = (0..n).rev().map(|k| (lp("-s3"), g(k))).collect();
    tail.push((lp("-s2"), lp("s1")));
    Ok(ContinuedFraction { a0: g(n), tail })
}

/// `[h_n; -s3^2/h_{n-1}, ..., -s3^2/h_0, -s1 s3/s2]`, equal to `P_{2n+3}/P_{2n+1}`.
pub fn cf_convergent_pell(n: i64) -> Result<ContinuedFraction, FibError> {
    if n < 1 {
        return Err(FibError::TooSmall { n, min: 1 });
    }
    let mut tail: Vec<(LaurentPoly, LaurentPoly)> = (0..n).rev().map(|k| (lp("-s3^2"), h(k))).collect();
    tail.push((lp("-s1*s3"), lp("s2")));
    Ok(ContinuedFraction { a0: h(n), tail })
}

/// Fibonacci numbers `phi_m` (`phi_1 = phi_2 = 1`) or Pell numbers `psi_m` (`psi_1 = 1`,
/// `psi_2 = 2`) from the binomial sums in powers of 3 and 6.
pub fn classical_sequence(family: Family, m: i64) -> Result<BigInt, FibError> {
    if m < 1 {
        return Err(FibError::TooSmall { n: m, min: 1 });
    }
    let n = (m - 1) / 4;
    let base = BigInt::from(match family {
        Family::Fibonacci => 3,
        Family::Pell => 6,
    });
    // sum_{i=0}^{top} (-1)^i C(top_n - i, i) base^(e - 2i)
    let sum = |top: i64, cn: i64, e: i64| -> BigInt {
        (0..=top).map(|i| signed(i) * binom(cn - i, i) * num_traits::pow(base.clone(), (e - 2 * i) as usize)).sum()
    };
    let two = BigInt::from(2);
    Ok(match (family, (m - 1) % 4) {
        (Family::Fibonacci, 0) => sum(n, 2 * n, 2 * n) - sum(n - 1, 2 * n - 1, 2 * n - 1),
        (Family::Fibonacci, 1) => sum(n, 2 * n, 2 * n + 1) - &two * sum(n, 2 * n, 2 * n),
        (Family::Fibonacci, 2) => sum(n, 2 * n + 1, 2 * n + 1) - sum(n, 2 * n, 2 * n),
        (Family::Fibonacci, _) => sum(n, 2 * n + 1, 2 * n + 1),
        (Family::Pell, 0) => sum(n, 2 * n, 2 * n) - sum(n - 1, 2 * n - 1, 2 * n - 1),
        (Family::Pell, 1) => sum(n, 2 * n, 2 * n + 1) / &two - sum(n, 2 * n, 2 * n),
        (Family::Pell, 2) => sum(n, 2 * n + 1, 2 * n + 1) - sum(n, 2 * n, 2 * n),
        (Family::Pell, _) => {
            &two * sum(n, 2 * n + 1, 2 * n + 1) + sum(n, 2 * n, 2 * n + 1) / &two - BigInt::from(3) * sum(n, 2 * n, 2 * n)
        }
    })
}

/// The four points whose hull is the Newton polygon of `F_{4n+1}` (`n >= 1`).
pub fn fib_newton_points_4n1(n: i64) -> [Exponent; 4] {
    let e = |a: i64, b: i64, c: i64| Exponent::new(a as u32, b as u32, c as i32);
    [e(n + 1, n, 0), e(1, 0, n), e(n - 1, n + 1, 0), e(0, 2, n - 1)]
}

/// The four points whose hull is the Newton polygon of `F_{4n+3}` (`n >= 0`).
pub fn fib_newton_points_4n3(n: i64) -> [Exponent; 4] {
    let e = |a: i64, b: i64, c: i64| Exponent::new(a as u32, b as u32, c as i32);
    [e(n + 2, n, 0), e(2, 0, n), e(n, n + 1, 0), e(0, 1, n)]
}

/// Four support points of `P_{4n+1}` whose projections tend to the corners of the limiting quadrilateral.
pub fn pell_support_points_4n1(n: i64) -> [Exponent; 4] {
    let e = |a: i64, b: i64, c: i64| Exponent::new(a as u32, b as u32, c as i32);
    [e(0, 1, 2 * n), e(2 * n, 2 * n + 1, 0), e(0, 3 * n + 1, 0), e(3 * n, 1, n)]
}

/// CSV table `index,d,q,vertices` of Newton polygons of `F_1..F_{2m+1}` or `P_1..P_{2m+1}`.
/// Vertices are listed counterclockwise as `a1 a2 a3` triples separated by `;`.
pub fn newton_csv(family: Family, m: usize) -> String {
    let seq = match family {
        Family::Fibonacci => fibonacci_sequence(m),
        Family::Pell => pell_sequence(m),
    };
    let mut out = String::from("index,d,q,vertices\n");
    for (k, f) in seq.iter().enumerate() {
        let bd = f.bidegree().expect("quasi-homogeneous");
        let np = f.newton_polygon().expect("quasi-homogeneous");
        let v: Vec<String> = np.vertices.iter().map(|e| format!("{} {} {}", e.a1, e.a2, e.a3)).collect();
        out.push_str(&format!("{},{},{},{}\n", 2 * k + 1, bd.d, bd.q, v.join(";")));
    }
    out
}

/// `f` at `s1 = s2 = 1 + q + q^2`, `s3 = q^2`, as a map from powers of `q` to coefficients.
pub fn q_specialization(f: &LaurentPoly) -> std::collections::BTreeMap<i64, BigInt> {
    let base = [BigInt::one(), BigInt::one(), BigInt::one()];
    let mut out: std::collections::BTreeMap<i64, BigInt> = std::collections::BTreeMap::new();
    for (e, c) in f.terms() {
        // (1+q+q^2)^(a1+a2) q^(2 a3)
        let mut poly: Vec<BigInt> = vec![BigInt::one()];
        for _ in 0..(e.a1 + e.a2) {
            let mut next = vec![BigInt::zero(); poly.len() + 2];
            for (i, x) in poly.iter().enumerate() {
                for (j, b) in base.iter().enumerate() {
                    next[i + j] += x * b;
                }
            }
            poly = next;
        }
        for (i, x) in poly.into_iter().enumerate() {
            *out.entry(i as i64 + 2 * e.a3 as i64).or_insert_with(BigInt::zero) += x * c;
        }
    }
    out.retain(|_, v| !v.is_zero());
    out
}
