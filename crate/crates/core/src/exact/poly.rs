//! Univariate polynomials and rational functions over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn q_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or_else(|| {
        // fall back for huge numerators/denominators
        let n = x.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = x.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

/// Polynomial with rational coefficients in ascending degree order.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct ExactPolynomial {
    coeffs: Vec<BigRational>,
}

impl ExactPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| q(c)).collect())
    }

    pub fn from_bigints(coeffs: Vec<BigInt>) -> Self {
        Self::new(coeffs.into_iter().map(BigRational::from_integer).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `x - a`.
    pub fn linear_root(a: BigRational) -> Self {
        Self::new(vec![-a, BigRational::one()])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.leading().recip())
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut out = Self::one();
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * q(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + q_to_f64(c))
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &ExactPolynomial) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        acc
    }

    /// `self(num(x) / den(x))` as a rational function.
    pub fn compose_rational(&self, num: &ExactPolynomial, den: &ExactPolynomial) -> RationalFunction {
        let Some(d) = self.degree() else {
            return RationalFunction::zero();
        };
        // sum_k c_k num^k den^(d-k) / den^d
        let mut top = Self::zero();
        let mut num_pow = Self::one();
        for k in 0..=d {
            let term = &(&num_pow * &den.pow(d - k)) * &Self::constant(self.coeffs[k].clone());
            top = &top + &term;
            num_pow = &num_pow * num;
        }
        RationalFunction::new(top, den.pow(d)).expect("denominator is a power of a nonzero polynomial")
    }

    pub fn div_rem(&self, divisor: &ExactPolynomial) -> Result<(Self, Self)> {
        let dd = divisor
            .degree()
            .ok_or_else(|| Error::Internal("polynomial division by zero".into()))?;
        let lead_inv = divisor.leading().recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd && !rem.is_empty() {
            let k = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() * &lead_inv;
            if !factor.is_zero() {
                for (i, c) in divisor.coeffs.iter().enumerate() {
                    rem[k + i] -= &factor * c;
                }
                quot[k] = factor;
            }
            rem.pop();
        }
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact division; errors when the remainder is nonzero.
    pub fn div_exact(&self, divisor: &ExactPolynomial) -> Result<Self> {
        let (quot, rem) = self.div_rem(divisor)?;
        if !rem.is_zero() {
            return Err(Error::Internal("polynomial division left a remainder".into()));
        }
        Ok(quot)
    }

    /// Monic greatest common divisor (zero iff both are zero).
    pub fn gcd(&self, other: &ExactPolynomial) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("b is nonzero").1;
            a = b;
            // keep intermediate coefficients small
            b = r.primitive_part();
        }
        a.monic()
    }

    /// Scales by a positive rational so that coefficients are coprime
    /// integers; the sign pattern is preserved.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let ints = self.integer_coeffs();
        let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
        Self::from_bigints(ints.into_iter().map(|c| c / &g).collect())
    }

    /// Coefficients times the positive lcm of the denominators.
    fn integer_coeffs(&self) -> Vec<BigInt> {
        let l = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        self.coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(l.clone())).to_integer())
            .collect()
    }

    /// Yun square-free factorization: `(factor, multiplicity)` with monic
    /// square-free factors whose product with powers is `self` up to a constant.
    pub fn square_free_decomposition(&self) -> Vec<(ExactPolynomial, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0).expect("gcd divides");
        let mut c = df.div_exact(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a).expect("gcd divides");
            c = d.div_exact(&a).expect("gcd divides");
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }

    /// All real roots with multiplicity, ascending, each accurate to about
    /// `1e-15` relative. Exact Sturm isolation on the square-free factors.
    pub fn real_roots(&self) -> Result<Vec<f64>> {
        if self.is_zero() {
            return Err(Error::Internal("roots of the zero polynomial".into()));
        }
        let mut roots = Vec::new();
        for (factor, mult) in self.square_free_decomposition() {
            for r in isolate_square_free(&factor) {
                roots.extend(std::iter::repeat(r).take(mult));
            }
        }
        roots.sort_by(f64::total_cmp);
        Ok(roots)
    }
}

/// Integer polynomial used for fast exact sign evaluation at rationals.
struct IntPoly(Vec<BigInt>);

impl IntPoly {
    fn from_poly(p: &ExactPolynomial) -> Self {
        IntPoly(p.primitive_part().coeffs.iter().map(|c| c.to_integer()).collect())
    }

    /// Sign of `p(num/den)` for `den > 0`, via homogeneous Horner.
    fn sign_at(&self, x: &BigRational) -> i8 {
        let (p, d) = (x.numer(), x.denom());
        let Some(top) = self.0.last() else { return 0 };
        let mut acc = top.clone();
        let mut dpow = BigInt::one();
        for c in self.0.iter().rev().skip(1) {
            dpow *= d;
            acc = acc * p + c * &dpow;
        }
        if acc.is_zero() {
            0
        } else if acc.is_positive() {
            1
        } else {
            -1
        }
    }
}

struct Sturm(Vec<IntPoly>);

impl Sturm {
    fn new(f: &ExactPolynomial) -> Self {
        let mut seq = vec![f.primitive_part(), f.derivative().primitive_part()];
        loop {
            let n = seq.len();
            let r = seq[n - 2].div_rem(&seq[n - 1]).expect("nonzero").1;
            if r.is_zero() {
                break;
            }
            seq.push((-&r).primitive_part());
        }
        Sturm(seq.iter().map(IntPoly::from_poly).collect())
    }

    fn variations(&self, x: &BigRational) -> usize {
        let mut count = 0;
        let mut last = 0i8;
        for p in &self.0 {
            let s = p.sign_at(x);
            if s != 0 {
                if last != 0 && s != last {
                    count += 1;
                }
                last = s;
            }
        }
        count
    }
}

fn isolate_square_free(f: &ExactPolynomial) -> Vec<f64> {
    let deg = f.degree().unwrap_or(0);
    if deg == 0 {
        return Vec::new();
    }
    if deg == 1 {
        let c = &f.coeffs;
        return vec![q_to_f64(&(-&c[0] / &c[1]))];
    }
    let sturm = Sturm::new(f);
    let sign = IntPoly::from_poly(f);
    let lead = f.leading().abs();
    let bound = f.coeffs[..deg]
        .iter()
        .map(|c| c.abs() / &lead)
        .fold(BigRational::zero(), |m, x| if x > m { x } else { m })
        + BigRational::one();
    let bound = BigRational::from_integer(bound.ceil().to_integer());

    let mut roots = Vec::new();
    let mut stack = vec![(-bound.clone(), bound)];
    let two = q(2);
    while let Some((lo, hi)) = stack.pop() {
        let count = sturm.variations(&lo) - sturm.variations(&hi);
        match count {
            0 => {}
            1 => roots.push(refine(&sturm, &sign, lo, hi)),
            _ => {
                let mid = (&lo + &hi) / &two;
                stack.push((lo, mid.clone()));
                stack.push((mid, hi));
            }
        }
    }
    roots
}

/// Narrows an interval `(lo, hi]` holding exactly one simple root.
fn refine(sturm: &Sturm, sign: &IntPoly, mut lo: BigRational, mut hi: BigRational) -> f64 {
    let two = q(2);
    if sign.sign_at(&hi) == 0 {
        return q_to_f64(&hi);
    }
    // lo may itself be a root of a neighbouring interval; step off it.
    while sign.sign_at(&lo) == 0 {
        let mid = (&lo + &hi) / &two;
        if sign.sign_at(&mid) == 0 {
            return q_to_f64(&mid);
        }
        if sturm.variations(&lo) - sturm.variations(&mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let s_lo = sign.sign_at(&lo);
    for _ in 0..400 {
        let (lf, hf) = (q_to_f64(&lo), q_to_f64(&hi));
        if hf - lf <= 1e-15 * lf.abs().max(hf.abs()).max(1e-300) || hf - lf <= f64::MIN_POSITIVE {
            break;
        }
        let mid = (&lo + &hi) / &two;
        let s = sign.sign_at(&mid);
        if s == 0 {
            return q_to_f64(&mid);
        }
        if s == s_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    q_to_f64(&((&lo + &hi) / &two))
}

impl Add for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn add(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ExactPolynomial::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn sub(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        ExactPolynomial::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn mul(self, rhs: &ExactPolynomial) -> ExactPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return ExactPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        ExactPolynomial::new(out)
    }
}

impl Neg for &ExactPolynomial {
    type Output = ExactPolynomial;
    fn neg(self) -> ExactPolynomial {
        ExactPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Debug for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for ExactPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let a = c.abs();
            if !a.is_one() || k == 0 {
                write!(f, "{a}")?;
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Reduced quotient of polynomials with a monic denominator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: ExactPolynomial,
    den: ExactPolynomial,
}

impl RationalFunction {
    pub fn new(num: ExactPolynomial, den: ExactPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Internal("rational function with zero denominator".into()));
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let num = num.div_exact(&g)?;
        let den = den.div_exact(&g)?;
        let lead = den.leading().recip();
        Ok(Self {
            num: num.scale(&lead),
            den: den.scale(&lead),
        })
    }

    pub fn zero() -> Self {
        Self {
            num: ExactPolynomial::zero(),
            den: ExactPolynomial::one(),
        }
    }

    pub fn from_poly(p: ExactPolynomial) -> Self {
        Self {
            num: p,
            den: ExactPolynomial::one(),
        }
    }

    pub fn numerator(&self) -> &ExactPolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &ExactPolynomial {
        &self.den
    }

    /// `Some` when the denominator is constant.
    pub fn as_polynomial(&self) -> Option<ExactPolynomial> {
        (self.den.degree() == Some(0)).then(|| self.num.scale(&self.den.coeff(0).recip()))
    }

    pub fn eval(&self, x: &BigRational) -> Option<BigRational> {
        let d = self.den.eval(x);
        (!d.is_zero()).then(|| self.num.eval(x) / d)
    }

    pub fn add(&self, other: &Self) -> Self {
        Self::new(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
        .expect("product of nonzero denominators")
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&q(-1)))
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(&self.num * &other.num, &self.den * &other.den)
            .expect("product of nonzero denominators")
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.num.is_zero() {
            return Err(Error::Internal("division by the zero rational function".into()));
        }
        Self::new(&self.num * &other.den, &self.den * &other.num)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        Self::new(self.num.scale(c), self.den.clone()).expect("denominator unchanged")
    }

    /// `self(inner(x))`.
    pub fn compose(&self, inner: &RationalFunction) -> Result<Self> {
        let top = self.num.compose_rational(&inner.num, &inner.den);
        let bottom = self.den.compose_rational(&inner.num, &inner.den);
        top.div(&bottom)
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}
