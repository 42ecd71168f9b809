//! Binet-type closed values of `F_{4k+1}` and `F_{4k+3}` in double precision.

use crate::{star_fibonacci, FibError};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BinetReport {
    pub predicted: f64,
    pub exact: f64,
    pub rel_error: f64,
}

struct Coeffs {
    a_plus: f64,
    a_minus: f64,
    alpha: [f64; 2],
    beta: [f64; 2],
    gamma: [f64; 2],
}

fn coeffs(s: [f64; 3]) -> Result<Coeffs, FibError> {
    let [s1, s2, s3] = s;
    let disc = s1 * s1 * s2 * s2 - 4.0 * s1 * s2 * s3;
    if !(disc > 0.0) || s3 == 0.0 {
        return Err(FibError::Binet(format!("degenerate point: discriminant {disc}, s3 = {s3}")));
    }
    let r = disc.sqrt();
    Ok(Coeffs {
        a_plus: (s1 * s2 - 2.0 * s3 + r) / (2.0 * s3 * s3),
        a_minus: (s1 * s2 - 2.0 * s3 - r) / (2.0 * s3 * s3),
        alpha: [s1, s1 * s3 - s2 * s2],
        beta: [s1 * s1 - s2, -s2 * s3],
        gamma: [2.0 * s3 - s1 * s2, s3 * s3],
    })
}

/// Binet value of `F_index` (odd positive index) at `s` against direct evaluation.
pub fn binet_fib(index: i64, s: [f64; 3]) -> Result<BinetReport, FibError> {
    if index < 1 || index % 2 == 0 {
        return Err(FibError::BadIndex(index));
    }
    let c = coeffs(s)?;
    let k = (index - 1) / 4;
    let num = if index % 4 == 1 { c.alpha } else { c.beta };
    let term = |a: f64| (num[1] * a + num[0]) / (a.powi(k as i32 + 1) * (2.0 * c.gamma[1] * a + c.gamma[0]));
    let predicted = -term(c.a_plus) - term(c.a_minus);
    let exact = star_fibonacci((index - 1) / 2).evaluate_f64(s);
    let rel_error = ((predicted - exact) / exact).abs();
    Ok(BinetReport { predicted, exact, rel_error })
}

/// The two sides of the ratio identity `s2 (b1 a + b0)/(a1 a + a0) = s1 (a1 a + a0)/(a (b1 a + b0))`
/// at the subdominant root `a_-`, the common limit of `s2 F_{4k+3}/F_{4k+1}` and `s1 F_{4k+5}/F_{4k+3}`.
pub fn ratio_limits(s: [f64; 3]) -> Result<(f64, f64), FibError> {
    let c = coeffs(s)?;
    let a = c.a_minus;
    let al = c.alpha[1] * a + c.alpha[0];
    let be = c.beta[1] * a + c.beta[0];
    Ok((s[1] * be / al, s[0] * al / (a * be)))
}

