//! Exact arithmetic in the number field Q(√2, √3, √5).
//!
//! A scalar is a rational combination of the eight basis elements
//! `√(2^a 3^b 5^c)`, `a, b, c ∈ {0, 1}`; coefficient `i` belongs to the basis
//! element whose exponent bits are `i` (bit 0 for √2, bit 1 for √3, bit 2 for
//! √5). This field contains `cos(π/m)` for `m ∈ {2, 3, 4, 5, 6}`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

const PRIMES: [i64; 3] = [2, 3, 5];
const DIM: usize = 8;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar([BigRational; DIM]);

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Product of the primes whose bits are set in `bits`.
fn prime_product(bits: usize) -> i64 {
    (0..3).filter(|b| bits >> b & 1 == 1).map(|b| PRIMES[b]).product()
}

fn mul_into(a: &[BigRational], b: &[BigRational], out: &mut [BigRational]) {
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let factor = prime_product(i & j);
            let term = x * y;
            out[i ^ j] += if factor == 1 { term } else { term * BigInt::from(factor) };
        }
    }
}

/// Sign of the element of `Q(√2, ..., √p_level)` with the given coefficients
/// (`coeffs.len() == 2^level`).
fn sign_in(coeffs: &[BigRational], level: usize) -> Ordering {
    if level == 0 {
        return coeffs[0].cmp(&BigRational::zero());
    }
    let half = coeffs.len() / 2;
    let (x, y) = coeffs.split_at(half);
    let sx = sign_in(x, level - 1);
    let sy = sign_in(y, level - 1);
    if sy == Ordering::Equal || sx == sy {
        return sx;
    }
    if sx == Ordering::Equal {
        return sy;
    }
    // x + y√p with sign(x) = -sign(y): compare x^2 with p y^2
    let p = BigInt::from(PRIMES[level - 1]);
    let mut xx = vec![BigRational::zero(); half];
    let mut yy = vec![BigRational::zero(); half];
    mul_into(x, x, &mut xx);
    mul_into(y, y, &mut yy);
    let diff: Vec<BigRational> = xx.iter().zip(&yy).map(|(a, b)| a - b * &p).collect();
    let sd = sign_in(&diff, level - 1);
    if sx == Ordering::Greater {
        sd
    } else {
        sd.reverse()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar(std::array::from_fn(|_| BigRational::zero()))
    }

    pub fn one() -> Self {
        Self::rational(1, 1)
    }

    pub fn rational(n: i64, d: i64) -> Self {
        let mut s = Self::zero();
        s.0[0] = rat(n, d);
        s
    }

    /// `(n/d) · √(radicand)` for a squarefree divisor `radicand` of 30.
    pub fn surd(n: i64, d: i64, radicand: i64) -> Self {
        let bits = (0..3).filter(|&b| radicand % PRIMES[b] == 0).fold(0, |acc, b| acc | 1 << b);
        assert_eq!(prime_product(bits), radicand, "radicand must be a squarefree divisor of 30");
        let mut s = Self::zero();
        s.0[bits] = rat(n, d);
        s
    }

    /// `cos(π/m)` for `m ∈ {1, 2, 3, 4, 5, 6}`.
    pub fn cos_pi_over(m: u32) -> Option<Self> {
        Some(match m {
            1 => Self::rational(-1, 1),
            2 => Self::zero(),
            3 => Self::rational(1, 2),
            4 => Self::surd(1, 2, 2),
            5 => Self::rational(1, 4) + Self::surd(1, 4, 5),
            6 => Self::surd(1, 2, 3),
            _ => return None,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Exact sign.
    pub fn signum(&self) -> Ordering {
        sign_in(&self.0, 3)
    }

    pub fn is_negative(&self) -> bool {
        self.signum() == Ordering::Less
    }

    pub fn is_positive(&self) -> bool {
        self.signum() == Ordering::Greater
    }

    /// `self + k * other`, with `k` a small integer.
    pub fn add_scaled(&self, k: i64, other: &Scalar) -> Scalar {
        let k = BigInt::from(k);
        let mut out = self.clone();
        for (o, x) in out.0.iter_mut().zip(&other.0) {
            if !x.is_zero() {
                *o += x * &k;
            }
        }
        out
    }

    pub fn coefficients(&self) -> &[BigRational; DIM] {
        &self.0
    }

    /// Approximate value, for diagnostics only.
    pub fn to_f64(&self) -> f64 {
        use num_traits::ToPrimitive;
        self.0
            .iter()
            .enumerate()
            .map(|(i, c)| c.to_f64().unwrap_or(f64::NAN) * (prime_product(i) as f64).sqrt())
            .sum()
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(mut self, rhs: Scalar) -> Scalar {
        for (a, b) in self.0.iter_mut().zip(rhs.0) {
            *a += b;
        }
        self
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        self.add_scaled(1, rhs)
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self.add_scaled(-1, rhs)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(mut self) -> Scalar {
        for a in self.0.iter_mut() {
            *a = -a.clone();
        }
        self
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        let mut out = Scalar::zero();
        mul_into(&self.0, &rhs.0, &mut out.0);
        out
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.0.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            if i == 0 {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "√{}", prime_product(i))?;
            } else {
                write!(f, "{mag}√{}", prime_product(i))?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
