//! Exact arithmetic in the three supported coefficient fields: Q, a simple
//! algebraic extension Q[a]/(m(a)), and the rational-function field Q(t).
//!
//! Every element is stored in canonical form, so structural equality decides
//! mathematical equality and the zero test is exact:
//! * rationals are reduced with positive denominator (`BigRational` keeps
//!   this invariant for us);
//! * extension elements are coordinate vectors in the power basis
//!   1, a, ..., a^(e-1);
//! * rational functions are reduced fractions of univariate polynomials
//!   with monic denominator.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::qpoly::{render_rational, QPoly};

/// Arbitrary-precision integer; all integer constants in the crate.
pub type Integer = BigInt;
/// Arbitrary-precision rational in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Which field a computation lives in. Exactly one descriptor is shared by
/// every value of a computation context.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldDescriptor {
    /// The rational numbers Q.
    Rationals,
    /// Q[generator]/(minpoly), with `minpoly` monic of degree >= 2,
    /// squarefree, stored dense with the constant term first.
    AlgebraicExtension {
        generator: String,
        minpoly: Vec<Rational>,
    },
    /// Q(variable), rational functions in one indeterminate.
    RationalFunctions { variable: String },
}

impl FieldDescriptor {
    fn short_name(&self) -> String {
        match self {
            FieldDescriptor::Rationals => "Q".to_string(),
            FieldDescriptor::AlgebraicExtension { generator, minpoly } => {
                format!("Q[{}]/(deg {})", generator, minpoly.len() - 1)
            }
            FieldDescriptor::RationalFunctions { variable } => format!("Q({})", variable),
        }
    }
}

/// Shared handle to a field descriptor. Cloning is cheap and equality uses
/// a pointer fast path before falling back to structural comparison.
#[derive(Clone)]
pub struct Field {
    inner: Arc<FieldDescriptor>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Field({})", self.inner.short_name())
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner == other.inner
    }
}

impl Eq for Field {}

impl Field {
    /// The field Q.
    pub fn rationals() -> Field {
        Field {
            inner: Arc::new(FieldDescriptor::Rationals),
        }
    }

    /// Q[generator]/(minpoly). The minimal polynomial must be monic of
    /// degree at least 2 and squarefree; irreducibility is not verified
    /// (a zero divisor discovered later surfaces as
    /// `ReducibleMinimalPolynomial`).
    pub fn algebraic_extension(generator: &str, minpoly: Vec<Rational>) -> Result<Field> {
        let poly = QPoly::from_coeffs(minpoly.clone());
        let deg = poly.degree().unwrap_or(0);
        if deg < 2 {
            return Err(Error::InvalidDescriptor(format!(
                "minimal polynomial must have degree >= 2, got {}",
                deg
            )));
        }
        if !poly.is_monic() {
            return Err(Error::InvalidDescriptor(
                "minimal polynomial must be monic".to_string(),
            ));
        }
        if !poly.gcd(&poly.derivative()).is_one() {
            return Err(Error::InvalidDescriptor(
                "minimal polynomial must be squarefree".to_string(),
            ));
        }
        // store trimmed to true degree
        let minpoly = poly.coeffs().to_vec();
        Ok(Field {
            inner: Arc::new(FieldDescriptor::AlgebraicExtension {
                generator: generator.to_string(),
                minpoly,
            }),
        })
    }

    /// Q(variable).
    pub fn rational_functions(variable: &str) -> Field {
        Field {
            inner: Arc::new(FieldDescriptor::RationalFunctions {
                variable: variable.to_string(),
            }),
        }
    }

    pub fn descriptor(&self) -> &FieldDescriptor {
        &self.inner
    }

    /// Name of the extension generator or function-field variable, if any.
    pub fn generator_name(&self) -> Option<&str> {
        match &*self.inner {
            FieldDescriptor::Rationals => None,
            FieldDescriptor::AlgebraicExtension { generator, .. } => Some(generator),
            FieldDescriptor::RationalFunctions { variable } => Some(variable),
        }
    }

    /// Degree of the extension over Q, if this is an extension field.
    pub fn extension_degree(&self) -> Option<usize> {
        match &*self.inner {
            FieldDescriptor::AlgebraicExtension { minpoly, .. } => Some(minpoly.len() - 1),
            _ => None,
        }
    }

    fn minpoly(&self) -> Option<QPoly> {
        match &*self.inner {
            FieldDescriptor::AlgebraicExtension { minpoly, .. } => {
                Some(QPoly::from_coeffs(minpoly.clone()))
            }
            _ => None,
        }
    }

    pub fn zero(&self) -> FieldElement {
        self.from_rational(Rational::zero())
    }

    pub fn one(&self) -> FieldElement {
        self.from_rational(Rational::one())
    }

    pub fn from_integer<T: Into<Integer>>(&self, n: T) -> FieldElement {
        self.from_rational(Rational::from_integer(n.into()))
    }

    pub fn from_rational(&self, r: Rational) -> FieldElement {
        let repr = match &*self.inner {
            FieldDescriptor::Rationals => Repr::Rational(r),
            FieldDescriptor::AlgebraicExtension { minpoly, .. } => {
                let mut coords = vec![Rational::zero(); minpoly.len() - 1];
                coords[0] = r;
                Repr::Algebraic(coords)
            }
            FieldDescriptor::RationalFunctions { .. } => Repr::RationalFunction {
                num: QPoly::constant(r),
                den: QPoly::one(),
            },
        };
        FieldElement {
            field: self.clone(),
            repr,
        }
    }

    /// The distinguished generator: a for Q[a]/(m), t for Q(t).
    pub fn generator(&self) -> Option<FieldElement> {
        let repr = match &*self.inner {
            FieldDescriptor::Rationals => return None,
            FieldDescriptor::AlgebraicExtension { minpoly, .. } => {
                let mut coords = vec![Rational::zero(); minpoly.len() - 1];
                coords[1] = Rational::one();
                Repr::Algebraic(coords)
            }
            FieldDescriptor::RationalFunctions { .. } => Repr::RationalFunction {
                num: QPoly::variable(),
                den: QPoly::one(),
            },
        };
        Some(FieldElement {
            field: self.clone(),
            repr,
        })
    }

    /// Parses an expression over integer constants and the field generator
    /// into an element (the full grammar of [`crate::parse`], restricted to
    /// constants).
    pub fn parse(&self, text: &str) -> Result<FieldElement> {
        crate::parse::parse_field_element(text, self)
    }

    fn mismatch(&self, other: &Field) -> Error {
        Error::DescriptorMismatch {
            lhs: self.inner.short_name(),
            rhs: other.inner.short_name(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Repr {
    Rational(Rational),
    /// Coordinates in the power basis, length = extension degree.
    Algebraic(Vec<Rational>),
    /// Reduced fraction of univariate polynomials, `den` monic and nonzero.
    RationalFunction { num: QPoly, den: QPoly },
}

/// An exact element of the ambient [`Field`]. Immutable; operations are
/// pure and yield canonical forms, so `==` is mathematical equality.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    repr: Repr,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn normalize_ratfn(num: QPoly, den: QPoly) -> Result<(QPoly, QPoly)> {
    if den.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let g = num.gcd(&den);
    let (num, den) = if g.is_one() || num.is_zero() {
        (num, den)
    } else {
        (num.divrem(&g).0, den.divrem(&g).0)
    };
    if num.is_zero() {
        return Ok((QPoly::zero(), QPoly::one()));
    }
    let lc = den.leading_coeff().expect("nonzero denominator").clone();
    if lc.is_one() {
        Ok((num, den))
    } else {
        let inv = lc.recip();
        Ok((num.scale(&inv), den.scale(&inv)))
    }
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Rational(r) => r.is_zero(),
            Repr::Algebraic(coords) => coords.iter().all(|c| c.is_zero()),
            Repr::RationalFunction { num, .. } => num.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.repr {
            Repr::Rational(r) => r.is_one(),
            Repr::Algebraic(coords) => {
                coords[0].is_one() && coords[1..].iter().all(|c| c.is_zero())
            }
            Repr::RationalFunction { num, den } => num.is_one() && den.is_one(),
        }
    }

    /// The underlying rational when the element lies in the prime field.
    pub fn as_rational(&self) -> Option<Rational> {
        match &self.repr {
            Repr::Rational(r) => Some(r.clone()),
            Repr::Algebraic(coords) => {
                if coords[1..].iter().all(|c| c.is_zero()) {
                    Some(coords[0].clone())
                } else {
                    None
                }
            }
            Repr::RationalFunction { num, den } => {
                if den.is_one() {
                    num.constant_value()
                } else {
                    None
                }
            }
        }
    }

    /// Power-basis coordinates for extension-field elements.
    pub fn algebraic_coords(&self) -> Option<&[Rational]> {
        match &self.repr {
            Repr::Algebraic(coords) => Some(coords),
            _ => None,
        }
    }

    fn check_same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(self.field.mismatch(&other.field))
        }
    }

    pub fn try_add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same_field(other)?;
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a + b),
            (Repr::Algebraic(a), Repr::Algebraic(b)) => {
                Repr::Algebraic(a.iter().zip(b).map(|(x, y)| x + y).collect())
            }
            (
                Repr::RationalFunction { num: n1, den: d1 },
                Repr::RationalFunction { num: n2, den: d2 },
            ) => {
                let num = n1.mul(d2).add(&n2.mul(d1));
                let den = d1.mul(d2);
                let (num, den) = normalize_ratfn(num, den)?;
                Repr::RationalFunction { num, den }
            }
            _ => unreachable!("same field implies same representation"),
        };
        Ok(FieldElement {
            field: self.field.clone(),
            repr,
        })
    }

    pub fn try_sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.try_add(&other.checked_neg())
    }

    pub fn checked_neg(&self) -> FieldElement {
        let repr = match &self.repr {
            Repr::Rational(r) => Repr::Rational(-r.clone()),
            Repr::Algebraic(coords) => Repr::Algebraic(coords.iter().map(|c| -c.clone()).collect()),
            Repr::RationalFunction { num, den } => Repr::RationalFunction {
                num: num.neg(),
                den: den.clone(),
            },
        };
        FieldElement {
            field: self.field.clone(),
            repr,
        }
    }

    pub fn try_mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.check_same_field(other)?;
        let repr = match (&self.repr, &other.repr) {
            (Repr::Rational(a), Repr::Rational(b)) => Repr::Rational(a * b),
            (Repr::Algebraic(a), Repr::Algebraic(b)) => {
                let m = self.field.minpoly().expect("extension field");
                let prod = QPoly::from_coeffs(a.clone()).mul(&QPoly::from_coeffs(b.clone()));
                let rem = prod.rem(&m);
                Repr::Algebraic(pad_coords(rem, a.len()))
            }
            (
                Repr::RationalFunction { num: n1, den: d1 },
                Repr::RationalFunction { num: n2, den: d2 },
            ) => {
                let (num, den) = normalize_ratfn(n1.mul(n2), d1.mul(d2))?;
                Repr::RationalFunction { num, den }
            }
            _ => unreachable!("same field implies same representation"),
        };
        Ok(FieldElement {
            field: self.field.clone(),
            repr,
        })
    }

    /// Multiplicative inverse. In an extension this runs extended Euclid
    /// against the minimal polynomial; a nontrivial common factor means the
    /// declared minimal polynomial is reducible.
    pub fn inv(&self) -> Result<FieldElement> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let repr = match &self.repr {
            Repr::Rational(r) => Repr::Rational(r.recip()),
            Repr::Algebraic(coords) => {
                let m = self.field.minpoly().expect("extension field");
                let a = QPoly::from_coeffs(coords.clone());
                let (g, u, _) = a.extended_gcd(&m);
                if !g.is_one() {
                    return Err(Error::ReducibleMinimalPolynomial {
                        witness: self.to_string(),
                    });
                }
                let inv = u.rem(&m);
                Repr::Algebraic(pad_coords(inv, coords.len()))
            }
            Repr::RationalFunction { num, den } => {
                let (n, d) = normalize_ratfn(den.clone(), num.clone())?;
                Repr::RationalFunction { num: n, den: d }
            }
        };
        Ok(FieldElement {
            field: self.field.clone(),
            repr,
        })
    }

    pub fn try_div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.try_mul(&other.inv()?)
    }

    /// Integer power with arbitrary-precision exponent; negative exponents
    /// invert first.
    pub fn pow_big(&self, exp: &Integer) -> Result<FieldElement> {
        if exp.is_negative() {
            let inv = self.inv()?;
            return inv.pow_big(&-exp.clone());
        }
        let mut result = self.field.one();
        let mut base = self.clone();
        let mut e = exp.clone();
        let two = Integer::from(2);
        while !e.is_zero() {
            if (&e % &two).is_one() {
                result = result.try_mul(&base)?;
            }
            e /= &two;
            if !e.is_zero() {
                base = base.try_mul(&base)?;
            }
        }
        Ok(result)
    }

    pub fn pow(&self, exp: i64) -> Result<FieldElement> {
        self.pow_big(&Integer::from(exp))
    }
}

fn pad_coords(p: QPoly, len: usize) -> Vec<Rational> {
    let mut coords = p.coeffs().to_vec();
    coords.resize(len, Rational::zero());
    coords
}

// Operator impls for contexts where both operands are known to share a
// field (polynomial internals); they panic on a mismatch.
impl std::ops::Add for &FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: &FieldElement) -> FieldElement {
        self.try_add(rhs).expect("field mismatch in +")
    }
}

impl std::ops::Sub for &FieldElement {
    type Output = FieldElement;
    fn sub(self, rhs: &FieldElement) -> FieldElement {
        self.try_sub(rhs).expect("field mismatch in -")
    }
}

impl std::ops::Mul for &FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: &FieldElement) -> FieldElement {
        self.try_mul(rhs).expect("field mismatch in *")
    }
}

impl std::ops::Neg for &FieldElement {
    type Output = FieldElement;
    fn neg(self) -> FieldElement {
        self.checked_neg()
    }
}

impl fmt::Display for FieldElement {
    /// Renders in a form `Field::parse` accepts back, so documents
    /// round-trip.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Rational(r) => write!(f, "{}", render_rational(r)),
            Repr::Algebraic(coords) => {
                let gen = self.field.generator_name().expect("extension field");
                write!(f, "{}", QPoly::from_coeffs(coords.clone()).render(gen))
            }
            Repr::RationalFunction { num, den } => {
                let var = self.field.generator_name().expect("function field");
                if den.is_one() {
                    let body = num.render(var);
                    if num.is_constant() || num.coeffs().iter().filter(|c| !c.is_zero()).count() == 1
                    {
                        write!(f, "{}", body)
                    } else {
                        write!(f, "({})", body)
                    }
                } else {
                    write!(f, "({})/({})", num.render(var), den.render(var))
                }
            }
        }
    }
}

/// True when rendering this element inside a product needs parentheses.
pub(crate) fn needs_parens_in_product(e: &FieldElement) -> bool {
    match &e.repr {
        Repr::Rational(r) => r.is_negative(),
        Repr::Algebraic(coords) => coords.iter().filter(|c| !c.is_zero()).count() != 1
            || coords.iter().any(|c| c.is_negative()),
        Repr::RationalFunction { num, den } => {
            !den.is_one() || num.coeffs().iter().filter(|c| !c.is_zero()).count() != 1
                || num.coeffs().iter().any(|c| c.is_negative())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(Integer::from(n), Integer::from(d))
    }

    fn sqrt5_field() -> Field {
        Field::algebraic_extension("r", vec![q(-5, 1), q(0, 1), q(1, 1)]).unwrap()
    }

    #[test]
    fn rational_add() {
        let f = Field::rationals();
        let a = f.from_rational(q(1, 2));
        let b = f.from_rational(q(1, 3));
        assert_eq!(a.try_add(&b).unwrap(), f.from_rational(q(5, 6)));
    }

    #[test]
    fn generator_squares_to_five() {
        let f = sqrt5_field();
        let r = f.generator().unwrap();
        assert_eq!(r.try_mul(&r).unwrap(), f.from_integer(5));
    }

    #[test]
    fn generator_inverse_in_extension() {
        // r^{-1} = r/5 since r^2 = 5
        let f = sqrt5_field();
        let r = f.generator().unwrap();
        let inv = r.inv().unwrap();
        assert_eq!(r.try_mul(&inv).unwrap(), f.one());
        let fifth = f.from_rational(q(1, 5));
        assert_eq!(inv, r.try_mul(&fifth).unwrap());
    }

    #[test]
    fn rational_function_cancellation() {
        let f = Field::rational_functions("t");
        let t = f.generator().unwrap();
        let one = f.one();
        let tm1 = t.try_sub(&one).unwrap();
        let prod = tm1.try_mul(&tm1.inv().unwrap()).unwrap();
        assert!(prod.is_one());
        // (t^2-1)/(t-1) reduces to t+1
        let t2m1 = t.try_mul(&t).unwrap().try_sub(&one).unwrap();
        let red = t2m1.try_div(&tm1).unwrap();
        assert_eq!(red, t.try_add(&one).unwrap());
    }

    #[test]
    fn descriptor_mismatch_is_reported() {
        let a = Field::rationals().one();
        let b = sqrt5_field().one();
        assert!(matches!(
            a.try_add(&b),
            Err(Error::DescriptorMismatch { .. })
        ));
    }

    #[test]
    fn squarefree_minpoly_enforced() {
        // (x-1)^2 is not squarefree
        let err = Field::algebraic_extension("a", vec![q(1, 1), q(-2, 1), q(1, 1)]);
        assert!(matches!(err, Err(Error::InvalidDescriptor(_))));
    }

    #[test]
    fn division_by_zero() {
        let f = Field::rationals();
        assert_eq!(f.zero().inv(), Err(Error::DivisionByZero));
    }

    #[test]
    fn reducible_minpoly_detected_on_inversion() {
        // x^2 - 1 is squarefree but reducible; inverting x - 1 (= a - 1,
        // a zero divisor) must fail loudly.
        let f = Field::algebraic_extension("a", vec![q(-1, 1), q(0, 1), q(1, 1)]).unwrap();
        let a = f.generator().unwrap();
        let zd = a.try_sub(&f.one()).unwrap();
        assert!(matches!(
            zd.inv(),
            Err(Error::ReducibleMinimalPolynomial { .. })
        ));
    }

    #[test]
    fn pow_big_handles_negative_exponents() {
        let f = Field::rationals();
        let two = f.from_integer(2);
        assert_eq!(two.pow(-3).unwrap(), f.from_rational(q(1, 8)));
        assert_eq!(two.pow_big(&Integer::from(10)).unwrap(), f.from_integer(1024));
    }

    #[test]
    fn norm_form_in_quadratic_extension() {
        // (a + b r)(a - b r) = a^2 - 5 b^2 for rational a, b
        let f = sqrt5_field();
        let r = f.generator().unwrap();
        for (a, b) in [(1i64, 2i64), (-3, 7), (0, 4), (5, -5)] {
            let ae = f.from_integer(a);
            let be = f.from_integer(b);
            let lhs = ae
                .try_add(&be.try_mul(&r).unwrap())
                .unwrap()
                .try_mul(&ae.try_sub(&be.try_mul(&r).unwrap()).unwrap())
                .unwrap();
            let rhs = f.from_integer(a * a - 5 * b * b);
            assert_eq!(lhs, rhs);
        }
    }
}
