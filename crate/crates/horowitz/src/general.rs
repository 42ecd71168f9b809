//! Viète involutions for `H = Σ a_j x_j² − a0 Π x_j` and its ν-version in `2n` variables.

use laurent_core::LaurentPoly;

use crate::xpoly::XPoly;
use crate::HorError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Setting {
    Classical,
    Star,
}

#[derive(Clone, Debug)]
pub struct GeneralH {
    pub setting: Setting,
    pub a0: LaurentPoly,
    pub a: Vec<LaurentPoly>,
}

/// One claim with its outcome.
#[derive(Clone, Debug)]
pub struct Claim {
    pub name: String,
    pub pass: bool,
}

impl GeneralH {
    pub fn classical(a0: i64, a: &[i64]) -> Result<Self, HorError> {
        let h = GeneralH { setting: Setting::Classical, a0: LaurentPoly::constant(a0), a: a.iter().map(|&c| LaurentPoly::constant(c)).collect() };
        h.validate()?;
        Ok(h)
    }

    pub fn star(a0: LaurentPoly, a: Vec<LaurentPoly>) -> Result<Self, HorError> {
        let h = GeneralH { setting: Setting::Star, a0, a };
        h.validate()?;
        Ok(h)
    }

    pub fn n(&self) -> usize {
        self.a.len()
    }

    pub fn nvars(&self) -> usize {
        match self.setting {
            Setting::Classical => self.n(),
            Setting::Star => 2 * self.n(),
        }
    }

    fn validate(&self) -> Result<(), HorError> {
        if self.a.is_empty() {
            return Err(HorError::Weights("at least one weight is needed".into()));
        }
        if self.a0.is_zero() || self.a.iter().any(LaurentPoly::is_zero) {
            return Err(HorError::Weights("weights must be nonzero".into()));
        }
        if self.setting == Setting::Star {
            if let Some(j) = std::iter::once(&self.a0).chain(&self.a).position(|c| &c.star() != c) {
                return Err(HorError::Weights(format!("a{j} is not *-invariant")));
            }
        }
        for (j, c) in self.a.iter().enumerate() {
            if self.ratio(c).is_none() {
                return Err(HorError::Weights(format!("a{} does not divide a0", j + 1)));
            }
        }
        Ok(())
    }

    fn ratio(&self, c: &LaurentPoly) -> Option<LaurentPoly> {
        self.a0.div_exact(c)
    }

    fn var(&self, i: usize) -> XPoly {
        XPoly::var(self.nvars(), i)
    }

    /// Index of the variable carrying weight `j` in the product term.
    fn lead(&self, j: usize) -> usize {
        match self.setting {
            Setting::Classical => j,
            Setting::Star => 2 * j,
        }
    }

    fn product_except(&self, i: usize, offset: usize) -> XPoly {
        XPoly::product(self.nvars(), (0..self.n()).filter(|&j| j != i).map(|j| self.var(self.lead(j) + offset)).collect::<Vec<_>>().iter())
    }

    pub fn h(&self) -> XPoly {
        let m = self.nvars();
        let mut h = XPoly::zero(m);
        for (j, c) in self.a.iter().enumerate() {
            let t = match self.setting {
                Setting::Classical => self.var(j).mul(&self.var(j)),
                Setting::Star => self.var(2 * j).mul(&self.var(2 * j + 1)),
            };
            h = h.add(&t.scale(c));
        }
        let prod = XPoly::product(m, (0..self.n()).map(|j| self.var(self.lead(j))).collect::<Vec<_>>().iter());
        h.sub(&prod.scale(&self.a0))
    }

    /// Images of all variables under `v_i`.
    pub fn viete(&self, i: usize) -> Vec<XPoly> {
        let c = self.ratio(&self.a[i]).expect("validated");
        match self.setting {
            Setting::Classical => (0..self.n())
                .map(|k| if k == i { self.var(i).neg().add(&self.product_except(i, 0).scale(&c)) } else { self.var(k) })
                .collect(),
            Setting::Star => (0..self.n())
                .flat_map(|k| {
                    if k == i {
                        [self.var(2 * i + 1).neg().add(&self.product_except(i, 0).scale(&c)), self.var(2 * i).neg().add(&self.product_except(i, 1).scale(&c))]
                    } else {
                        [self.var(2 * k + 1), self.var(2 * k)]
                    }
                })
                .collect(),
        }
    }

    fn permutation_images(&self, perm: &[usize]) -> Vec<XPoly> {
        match self.setting {
            Setting::Classical => perm.iter().map(|&k| self.var(k)).collect(),
            Setting::Star => perm.iter().flat_map(|&k| [self.var(2 * k), self.var(2 * k + 1)]).collect(),
        }
    }

    fn sign_images(&self, flip: &[bool]) -> Vec<XPoly> {
        (0..self.nvars())
            .map(|k| {
                let j = match self.setting {
                    Setting::Classical => k,
                    Setting::Star => k / 2,
                };
                if flip[j] {
                    self.var(k).neg()
                } else {
                    self.var(k)
                }
            })
            .collect()
    }

    /// Every Viète map is an involution preserving `H` (and a ν-map in the star setting);
    /// weight-preserving permutations and even sign changes preserve `H`.
    pub fn claims(&self) -> Vec<Claim> {
        let h = self.h();
        let ident: Vec<XPoly> = (0..self.nvars()).map(|k| self.var(k)).collect();
        let mut out = Vec::new();
        for i in 0..self.n() {
            let v = self.viete(i);
            out.push(Claim { name: format!("v{} preserves H", i + 1), pass: h.substitute(&v) == h });
            let vv: Vec<XPoly> = v.iter().map(|f| f.substitute(&v)).collect();
            out.push(Claim { name: format!("v{} is an involution", i + 1), pass: vv == ident });
            if self.setting == Setting::Star {
                let commutes = (0..self.n()).all(|k| v[2 * k].nu() == v[2 * k + 1]);
                out.push(Claim { name: format!("v{} commutes with nu", i + 1), pass: commutes });
            }
        }
        let n = self.n();
        let mut perms_ok = true;
        for perm in permutations(n) {
            if perm.iter().enumerate().all(|(k, &j)| self.a[j] == self.a[k]) {
                perms_ok &= h.substitute(&self.permutation_images(&perm)) == h;
            }
        }
        out.push(Claim { name: "weight-preserving permutations preserve H".into(), pass: perms_ok });
        let mut signs_ok = true;
        for mask in 0u32..(1 << n) {
            if mask.count_ones() % 2 == 0 {
                let flip: Vec<bool> = (0..n).map(|j| mask >> j & 1 == 1).collect();
                signs_ok &= h.substitute(&self.sign_images(&flip)) == h;
            }
        }
        out.push(Claim { name: "even sign changes preserve H".into(), pass: signs_ok });
        out
    }

    pub fn check(&self) -> bool {
        self.claims().iter().all(|c| c.pass)
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for k in 0..n {
            let mut q = p.clone();
            q.insert(k, n - 1);
            out.push(q);
        }
    }
    out
}

/// `*`-invariant weights used for sampling: small constants and `f + f*` for a few monomials `f`.
pub fn self_star_pool() -> Vec<LaurentPoly> {
    let mut pool: Vec<LaurentPoly> = [1, -1, 2, 3].into_iter().map(LaurentPoly::constant).collect();
    for m in ["s1", "s1^2", "s1*s2", "s1^3", "s1*s3", "s2^2*s3^-1"] {
        let f = laurent_core::lp(m);
        pool.push(&f + &f.star());
    }
    pool
}

/// Random classical weights with `n <= max_n` and `a0` a signed multiple of `lcm(a_j)`.
pub fn random_classical<R: rand::Rng>(rng: &mut R, max_n: usize) -> GeneralH {
    let n = rng.gen_range(1..=max_n);
    let a: Vec<i64> = (0..n).map(|_| rng.gen_range(1..=6) * if rng.gen_bool(0.3) { -1 } else { 1 }).collect();
    let l = a.iter().fold(1i64, |acc, &k| num_integer::lcm(acc, k.abs()));
    let a0 = l * rng.gen_range(1..=3) * if rng.gen_bool(0.5) { -1 } else { 1 };
    GeneralH::classical(a0, &a).expect("a_j divides a0 by construction")
}

/// Random `*`-setting weights with `n <= max_n`, drawn from [`self_star_pool`], and `a0 = c Π a_j`.
pub fn random_star<R: rand::Rng>(rng: &mut R, max_n: usize) -> GeneralH {
    let pool = self_star_pool();
    let n = rng.gen_range(1..=max_n);
    let a: Vec<LaurentPoly> = (0..n).map(|_| pool[rng.gen_range(0..pool.len())].clone()).collect();
    let extra = pool[rng.gen_range(0..pool.len())].clone();
    let a0 = a.iter().fold(extra, |acc, c| &acc * c);
    GeneralH::star(a0, a).expect("a_j divides a0 by construction")
}
