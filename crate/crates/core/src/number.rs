//! Grossone numbers: finite sums of rational grossdigits times rational
//! powers of the infinite unit ①.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational used for both grossdigits and grosspowers.
pub type Rational = BigRational;

/// Default term budget used by callers that do not pick their own.
pub const DEFAULT_MAX_QUOTIENT_TERMS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithmeticError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("quotient does not terminate within {max_terms} terms")]
    NonTerminatingQuotient { max_terms: usize },
}

/// One `digit · ①^power` summand. The digit is never zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    digit: Rational,
    power: Rational,
}

impl Term {
    /// Returns `None` when `digit` is zero.
    pub fn new(digit: Rational, power: Rational) -> Option<Self> {
        if digit.is_zero() {
            None
        } else {
            Some(Self { digit, power })
        }
    }

    pub fn digit(&self) -> &Rational {
        &self.digit
    }

    pub fn power(&self) -> &Rational {
        &self.power
    }

    fn mul(&self, other: &Term) -> Term {
        Term {
            digit: &self.digit * &other.digit,
            power: &self.power + &other.power,
        }
    }
}

/// Where a grossone number sits relative to the finite numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NumberClass {
    Zero,
    Infinitesimal,
    Finite,
    Infinite,
}

impl std::fmt::Display for NumberClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            NumberClass::Zero => "Zero",
            NumberClass::Infinitesimal => "Infinitesimal",
            NumberClass::Finite => "Finite",
            NumberClass::Infinite => "Infinite",
        })
    }
}

/// A grossone number in canonical form.
///
/// Terms are kept sorted by strictly decreasing grosspower with no zero
/// grossdigits, so structural equality is numeric equality. Zero is the
/// empty term list.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct GrossNumber {
    terms: Vec<Term>,
}

impl GrossNumber {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    /// The infinite unit ① itself.
    pub fn grossone() -> Self {
        Self::monomial(Rational::one(), Rational::one())
    }

    pub fn monomial(digit: Rational, power: Rational) -> Self {
        Self {
            terms: Term::new(digit, power).into_iter().collect(),
        }
    }

    /// A finite number `value · ①^0`.
    pub fn from_rational(value: Rational) -> Self {
        Self::monomial(value, Rational::zero())
    }

    pub fn from_integer(value: impl Into<BigInt>) -> Self {
        Self::from_rational(Rational::from_integer(value.into()))
    }

    /// Builds the canonical number from arbitrary `(digit, power)` pairs.
    ///
    /// Pairs sharing a power are summed, zero sums disappear, and the result
    /// is ordered by decreasing power.
    pub fn canonicalize<I>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Rational)>,
    {
        let mut by_power: BTreeMap<Rational, Rational> = BTreeMap::new();
        for (digit, power) in pairs {
            *by_power.entry(power).or_insert_with(Rational::zero) += digit;
        }
        let terms = by_power
            .into_iter()
            .rev()
            .filter_map(|(power, digit)| Term::new(digit, power))
            .collect();
        Self { terms }
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    /// The term with the highest grosspower, if any.
    pub fn leading(&self) -> Option<&Term> {
        self.terms.first()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sign of the number: the sign of its leading grossdigit.
    pub fn signum(&self) -> Ordering {
        match self.leading() {
            None => Ordering::Equal,
            Some(t) if t.digit.is_positive() => Ordering::Greater,
            Some(_) => Ordering::Less,
        }
    }

    pub fn classify(&self) -> NumberClass {
        match self.leading() {
            None => NumberClass::Zero,
            Some(t) => match t.power.cmp(&Rational::zero()) {
                Ordering::Greater => NumberClass::Infinite,
                Ordering::Equal => NumberClass::Finite,
                Ordering::Less => NumberClass::Infinitesimal,
            },
        }
    }

    /// The finite value, when the number is finite or zero.
    pub fn as_rational(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [t] if t.power.is_zero() => Some(t.digit.clone()),
            _ => None,
        }
    }

    /// Exact quotient by long division on leading terms.
    ///
    /// Each step divides the remainder's leading term by the divisor's
    /// leading term. If the remainder is not zero after `max_terms` quotient
    /// terms the quotient has no finite record and an error is returned; the
    /// partial quotient is never handed back.
    pub fn div_exact(&self, divisor: &GrossNumber, max_terms: usize) -> Result<Self, ArithmeticError> {
        let lead = divisor.leading().ok_or(ArithmeticError::DivisionByZero)?;
        let mut quotient = Vec::new();
        let mut remainder = self.clone();
        while let Some(top) = remainder.leading() {
            if quotient.len() == max_terms {
                return Err(ArithmeticError::NonTerminatingQuotient { max_terms });
            }
            let step = Term {
                digit: &top.digit / &lead.digit,
                power: &top.power - &lead.power,
            };
            let product = GrossNumber {
                terms: divisor.terms.iter().map(|t| t.mul(&step)).collect(),
            };
            remainder = &remainder - &product;
            quotient.push(step);
        }
        // Steps come out with strictly decreasing powers.
        Ok(GrossNumber { terms: quotient })
    }

    fn merge(a: &[Term], b: &[Term], negate_b: bool) -> Self {
        let mut terms = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        let flip = |d: &Rational| if negate_b { -d } else { d.clone() };
        while i < a.len() && j < b.len() {
            match a[i].power.cmp(&b[j].power) {
                Ordering::Greater => {
                    terms.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(Term {
                        digit: flip(&b[j].digit),
                        power: b[j].power.clone(),
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let digit = &a[i].digit + flip(&b[j].digit);
                    terms.extend(Term::new(digit, a[i].power.clone()));
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&a[i..]);
        terms.extend(b[j..].iter().map(|t| Term {
            digit: flip(&t.digit),
            power: t.power.clone(),
        }));
        Self { terms }
    }
}

impl Add for &GrossNumber {
    type Output = GrossNumber;

    fn add(self, rhs: &GrossNumber) -> GrossNumber {
        GrossNumber::merge(&self.terms, &rhs.terms, false)
    }
}

impl Sub for &GrossNumber {
    type Output = GrossNumber;

    fn sub(self, rhs: &GrossNumber) -> GrossNumber {
        GrossNumber::merge(&self.terms, &rhs.terms, true)
    }
}

impl Mul for &GrossNumber {
    type Output = GrossNumber;

    fn mul(self, rhs: &GrossNumber) -> GrossNumber {
        GrossNumber::canonicalize(self.terms.iter().flat_map(|a| {
            rhs.terms.iter().map(move |b| {
                let t = a.mul(b);
                (t.digit, t.power)
            })
        }))
    }
}

impl Neg for &GrossNumber {
    type Output = GrossNumber;

    fn neg(self) -> GrossNumber {
        GrossNumber {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    digit: -&t.digit,
                    power: t.power.clone(),
                })
                .collect(),
        }
    }
}

macro_rules! forward_owned_binop {
    ($($imp:ident $method:ident),*) => {$(
        impl $imp for GrossNumber {
            type Output = GrossNumber;
            fn $method(self, rhs: GrossNumber) -> GrossNumber {
                (&self).$method(&rhs)
            }
        }
        impl $imp<&GrossNumber> for GrossNumber {
            type Output = GrossNumber;
            fn $method(self, rhs: &GrossNumber) -> GrossNumber {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned_binop!(Add add, Sub sub, Mul mul);

impl Neg for GrossNumber {
    type Output = GrossNumber;

    fn neg(mut self) -> GrossNumber {
        for t in &mut self.terms {
            t.digit = -std::mem::take(&mut t.digit);
        }
        self
    }
}

impl Ord for GrossNumber {
    /// `a` and `b` compare as the sign of `a - b`. Every grossdigit is finite,
    /// so ① outweighs it and the leading digit of the difference decides.
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum()
    }
}

impl PartialOrd for GrossNumber {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<i64> for GrossNumber {
    fn from(value: i64) -> Self {
        Self::from_integer(value)
    }
}

impl From<Rational> for GrossNumber {
    fn from(value: Rational) -> Self {
        Self::from_rational(value)
    }
}
