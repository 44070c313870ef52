//! Sparse multivariate polynomials over a [`Field`], with the two monomial
//! orders the Groebner engine supports. Terms are kept sorted strictly
//! descending under the polynomial's ambient order, with no zero
//! coefficients and no duplicate monomials; the zero polynomial is the
//! empty term list.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use smallvec::SmallVec;

use crate::error::{Error, Result};
use crate::field::{needs_parens_in_product, Field, FieldElement};

/// Default cap on the number of terms a single polynomial may reach during
/// arithmetic; blowing past it aborts with `SizeLimitExceeded` rather than
/// thrashing.
pub const DEFAULT_TERM_LIMIT: usize = 2_000_000;

/// Ordered list of variable symbols. The declaration order fixes the
/// variable order used by both monomial orders for the lifetime of a
/// computation.
#[derive(Debug, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
}

impl VarTable {
    pub fn new<I, S>(names: I) -> Result<Arc<VarTable>>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidDescriptor(
                "variable table must be nonempty".to_string(),
            ));
        }
        for (i, n) in names.iter().enumerate() {
            if names[..i].contains(n) {
                return Err(Error::InvalidDescriptor(format!(
                    "duplicate variable symbol {}",
                    n
                )));
            }
        }
        Ok(Arc::new(VarTable { names }))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Table for a product space: left names suffixed "1", right names
    /// suffixed "2" (the convention the worked examples use).
    pub fn product(left: &Arc<VarTable>, right: &Arc<VarTable>) -> Arc<VarTable> {
        let mut names: Vec<String> = left.names.iter().map(|n| format!("{}1", n)).collect();
        names.extend(right.names.iter().map(|n| format!("{}2", n)));
        Arc::new(VarTable {
            names: uniquify(names),
        })
    }

    /// Table for `copies` side-by-side copies of this one, suffixed by copy
    /// number.
    pub fn repeated(base: &Arc<VarTable>, copies: usize) -> Arc<VarTable> {
        let mut names = Vec::with_capacity(base.len() * copies);
        for c in 1..=copies {
            names.extend(base.names.iter().map(|n| format!("{}{}", n, c)));
        }
        Arc::new(VarTable {
            names: uniquify(names),
        })
    }

    /// Appends one fresh variable, adjusting the candidate name if taken.
    /// Returns the new table and the index of the added variable.
    pub fn extended(base: &Arc<VarTable>, candidate: &str) -> (Arc<VarTable>, usize) {
        let mut name = candidate.to_string();
        while base.names.contains(&name) {
            name.push('_');
        }
        let mut names = base.names.clone();
        names.push(name);
        let idx = names.len() - 1;
        (Arc::new(VarTable { names }), idx)
    }
}

fn uniquify(mut names: Vec<String>) -> Vec<String> {
    for i in 0..names.len() {
        while names[..i].contains(&names[i]) {
            names[i].push('_');
        }
    }
    names
}

/// Exponent vector over a fixed variable table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u32; 12]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn var(nvars: usize, index: usize, exp: u32) -> Monomial {
        let mut m = Monomial::one(nvars);
        m.exps[index] = exp;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Monomial {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u64 {
        self.exps.iter().map(|&e| e as u64).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// other / self when self divides other.
    pub fn divide_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Re-embed into a larger table, variable i landing at offset + i.
    pub fn lifted(&self, new_nvars: usize, offset: usize) -> Monomial {
        let mut exps = SmallVec::from_elem(0, new_nvars);
        for (i, &e) in self.exps.iter().enumerate() {
            exps[offset + i] = e;
        }
        Monomial { exps }
    }
}

/// Total order on exponent vectors, compatible with multiplication and
/// with 1 minimal.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MonomialOrder {
    Lex,
    DegRevLex,
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::DegRevLex => {
                let da = a.total_degree();
                let db = b.total_degree();
                if da != db {
                    return da.cmp(&db);
                }
                // reverse lexicographic tie-break: the last differing
                // exponent decides, smaller exponent wins
                for (x, y) in a.exps.iter().zip(&b.exps).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::DegRevLex => "degrevlex",
        }
    }

    pub fn from_name(name: &str) -> Result<MonomialOrder> {
        match name {
            "lex" => Ok(MonomialOrder::Lex),
            "degrevlex" => Ok(MonomialOrder::DegRevLex),
            other => Err(Error::InvalidDocument(format!(
                "unknown monomial order {:?} (expected \"lex\" or \"degrevlex\")",
                other
            ))),
        }
    }
}

/// Sparse multivariate polynomial over a fixed field, variable table, and
/// monomial order.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    field: Field,
    vars: Arc<VarTable>,
    order: MonomialOrder,
    /// Sorted strictly descending under `order`; no zero coefficients.
    terms: Vec<(Monomial, FieldElement)>,
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl MultiPoly {
    pub fn zero(field: &Field, vars: &Arc<VarTable>, order: MonomialOrder) -> MultiPoly {
        MultiPoly {
            field: field.clone(),
            vars: Arc::clone(vars),
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(
        field: &Field,
        vars: &Arc<VarTable>,
        order: MonomialOrder,
        c: FieldElement,
    ) -> MultiPoly {
        let mut p = MultiPoly::zero(field, vars, order);
        if !c.is_zero() {
            p.terms.push((Monomial::one(vars.len()), c));
        }
        p
    }

    pub fn one(field: &Field, vars: &Arc<VarTable>, order: MonomialOrder) -> MultiPoly {
        MultiPoly::constant(field, vars, order, field.one())
    }

    pub fn variable(
        field: &Field,
        vars: &Arc<VarTable>,
        order: MonomialOrder,
        index: usize,
    ) -> Result<MultiPoly> {
        if index >= vars.len() {
            return Err(Error::DimensionMismatch {
                expected: vars.len(),
                got: index,
            });
        }
        let mut p = MultiPoly::zero(field, vars, order);
        p.terms
            .push((Monomial::var(vars.len(), index, 1), field.one()));
        Ok(p)
    }

    /// Builds from arbitrary (monomial, coefficient) pairs: sorts, merges
    /// duplicates, drops zeros.
    pub fn from_terms(
        field: &Field,
        vars: &Arc<VarTable>,
        order: MonomialOrder,
        terms: Vec<(Monomial, FieldElement)>,
    ) -> MultiPoly {
        let mut p = MultiPoly::zero(field, vars, order);
        p.terms = canonicalize(terms, order);
        p
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn vars(&self) -> &Arc<VarTable> {
        &self.vars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &FieldElement)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn constant_value(&self) -> Option<FieldElement> {
        if self.terms.is_empty() {
            Some(self.field.zero())
        } else if self.terms.len() == 1 && self.terms[0].0.is_one() {
            Some(self.terms[0].1.clone())
        } else {
            None
        }
    }

    pub fn total_degree(&self) -> u64 {
        self.terms
            .iter()
            .map(|(m, _)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    fn check_compat(&self, other: &MultiPoly) -> Result<()> {
        if self.field != other.field {
            return Err(Error::DescriptorMismatch {
                lhs: format!("{:?}", self.field),
                rhs: format!("{:?}", other.field),
            });
        }
        if !Arc::ptr_eq(&self.vars, &other.vars) && self.vars != other.vars {
            return Err(Error::VarTableMismatch);
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch);
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_compat(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_compat(other)?;
        Ok(self.merge(other, true))
    }

    /// Merge two descending term lists, negating the right side when
    /// subtracting.
    fn merge(&self, other: &MultiPoly, negate_rhs: bool) -> MultiPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        while i < self.terms.len() && j < other.terms.len() {
            let (ma, ca) = &self.terms[i];
            let (mb, cb) = &other.terms[j];
            match self.order.compare(ma, mb) {
                Ordering::Greater => {
                    out.push((ma.clone(), ca.clone()));
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate_rhs { -cb } else { cb.clone() };
                    out.push((mb.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate_rhs { ca - cb } else { ca + cb };
                    if !c.is_zero() {
                        out.push((ma.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        for (m, c) in &self.terms[i..] {
            out.push((m.clone(), c.clone()));
        }
        for (m, c) in &other.terms[j..] {
            let c = if negate_rhs { -c } else { c.clone() };
            out.push((m.clone(), c));
        }
        MultiPoly {
            field: self.field.clone(),
            vars: Arc::clone(&self.vars),
            order: self.order,
            terms: out,
        }
    }

    pub fn checked_neg(&self) -> MultiPoly {
        MultiPoly {
            field: self.field.clone(),
            vars: Arc::clone(&self.vars),
            order: self.order,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.mul_limited(other, DEFAULT_TERM_LIMIT)
    }

    pub fn mul_limited(&self, other: &MultiPoly, limit: usize) -> Result<MultiPoly> {
        self.check_compat(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(MultiPoly::zero(&self.field, &self.vars, self.order));
        }
        let bound = self.terms.len().saturating_mul(other.terms.len());
        if bound > limit {
            return Err(Error::SizeLimitExceeded { limit });
        }
        let mut raw = Vec::with_capacity(bound);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                raw.push((ma.mul(mb), ca * cb));
            }
        }
        let terms = canonicalize(raw, self.order);
        if terms.len() > limit {
            return Err(Error::SizeLimitExceeded { limit });
        }
        Ok(MultiPoly {
            field: self.field.clone(),
            vars: Arc::clone(&self.vars),
            order: self.order,
            terms,
        })
    }

    pub fn scale(&self, c: &FieldElement) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.field, &self.vars, self.order);
        }
        MultiPoly {
            field: self.field.clone(),
            vars: Arc::clone(&self.vars),
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    /// Multiply by a single term c*m (coefficient assumed nonzero).
    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> MultiPoly {
        MultiPoly {
            field: self.field.clone(),
            vars: Arc::clone(&self.vars),
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|(ma, ca)| (ma.mul(m), ca * c))
                .collect(),
        }
    }

    /// self - c*m*g, merging in one pass. The workhorse of polynomial
    /// division.
    pub fn sub_mul_term(&self, g: &MultiPoly, m: &Monomial, c: &FieldElement) -> MultiPoly {
        let shifted = g.mul_term(m, c);
        self.merge(&shifted, true)
    }

    /// Divide every coefficient by the leading coefficient.
    pub fn make_monic(&self) -> Result<MultiPoly> {
        match self.leading_term() {
            None => Ok(self.clone()),
            Some((_, lc)) if lc.is_one() => Ok(self.clone()),
            Some((_, lc)) => {
                let inv = lc.inv()?;
                Ok(self.scale(&inv))
            }
        }
    }

    /// The evaluation homomorphism at a point.
    pub fn eval(&self, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.vars.len() {
            return Err(Error::DimensionMismatch {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        // cache powers of each coordinate up to its max exponent
        let maxdeg = self.max_degree_per_var();
        let mut powers: Vec<Vec<FieldElement>> = Vec::with_capacity(point.len());
        for (i, x) in point.iter().enumerate() {
            let mut col = Vec::with_capacity(maxdeg[i] as usize + 1);
            col.push(self.field.one());
            for k in 1..=maxdeg[i] as usize {
                let next = &col[k - 1] * x;
                col.push(next);
            }
            powers.push(col);
        }
        let mut acc = self.field.zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    term = &term * &powers[i][e as usize];
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    pub fn max_degree_per_var(&self) -> Vec<u32> {
        let mut out = vec![0u32; self.vars.len()];
        for (m, _) in &self.terms {
            for (i, &e) in m.exponents().iter().enumerate() {
                out[i] = out[i].max(e);
            }
        }
        out
    }

    /// Re-sorts the term list under a different ambient order.
    pub fn with_order(&self, order: MonomialOrder) -> MultiPoly {
        if order == self.order {
            return self.clone();
        }
        let mut terms = self.terms.clone();
        terms.sort_unstable_by(|(a, _), (b, _)| order.compare(b, a));
        MultiPoly {
            field: self.field.clone(),
            vars: Arc::clone(&self.vars),
            order,
            terms,
        }
    }

    /// Embeds into a larger variable table with this polynomial's variable
    /// i landing at offset + i.
    pub fn lifted(&self, vars: &Arc<VarTable>, offset: usize) -> Result<MultiPoly> {
        if offset + self.vars.len() > vars.len() {
            return Err(Error::DimensionMismatch {
                expected: vars.len(),
                got: offset + self.vars.len(),
            });
        }
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.lifted(vars.len(), offset), c.clone()))
            .collect();
        Ok(MultiPoly {
            field: self.field.clone(),
            vars: Arc::clone(vars),
            order: self.order,
            terms: canonicalize_sorted_hint(terms, self.order),
        })
    }
}

fn canonicalize(
    mut terms: Vec<(Monomial, FieldElement)>,
    order: MonomialOrder,
) -> Vec<(Monomial, FieldElement)> {
    terms.sort_unstable_by(|(a, _), (b, _)| order.compare(b, a));
    let mut out: Vec<(Monomial, FieldElement)> = Vec::with_capacity(terms.len());
    for (m, c) in terms {
        if let Some((lm, lc)) = out.last_mut() {
            if *lm == m {
                let sum = &*lc + &c;
                if sum.is_zero() {
                    out.pop();
                } else {
                    *lc = sum;
                }
                continue;
            }
        }
        if !c.is_zero() {
            out.push((m, c));
        }
    }
    out
}

/// Lifting pads equal zeros outside the block, which preserves relative
/// order under both Lex and DegRevLex; the sort is a no-op pass that keeps
/// the invariant obvious.
fn canonicalize_sorted_hint(
    mut terms: Vec<(Monomial, FieldElement)>,
    order: MonomialOrder,
) -> Vec<(Monomial, FieldElement)> {
    terms.sort_by(|(a, _), (b, _)| order.compare(b, a));
    terms
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let (sign, mag) = match c.as_rational() {
                Some(r) if r < crate::field::Rational::from_integer(0.into()) => {
                    ("-", self.field.from_rational(-r))
                }
                _ => ("+", c.clone()),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else if sign == "-" {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mono = render_monomial(m, &self.vars);
            if mono.is_empty() {
                if needs_parens_in_product(&mag) && !matches!(mag.as_rational(), Some(_)) {
                    write!(f, "({})", mag)?;
                } else {
                    write!(f, "{}", mag)?;
                }
            } else if mag.is_one() {
                write!(f, "{}", mono)?;
            } else if needs_parens_in_product(&mag) {
                write!(f, "({})*{}", mag, mono)?;
            } else {
                write!(f, "{}*{}", mag, mono)?;
            }
        }
        Ok(())
    }
}

fn render_monomial(m: &Monomial, vars: &VarTable) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.exponents().iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(vars.name(i).to_string()),
            _ => parts.push(format!("{}^{}", vars.name(i), e)),
        }
    }
    parts.join("*")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn setup() -> (Field, Arc<VarTable>) {
        (Field::rationals(), VarTable::new(["x", "y"]).unwrap())
    }

    fn var(f: &Field, v: &Arc<VarTable>, i: usize) -> MultiPoly {
        MultiPoly::variable(f, v, MonomialOrder::Lex, i).unwrap()
    }

    #[test]
    fn difference_of_squares() {
        let (f, v) = setup();
        let x = var(&f, &v, 0);
        let one = MultiPoly::one(&f, &v, MonomialOrder::Lex);
        let lhs = x
            .try_add(&one)
            .unwrap()
            .try_mul(&x.try_sub(&one).unwrap())
            .unwrap();
        let rhs = x.try_mul(&x).unwrap().try_sub(&one).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn cancellation_to_zero() {
        let (f, v) = setup();
        let x = var(&f, &v, 0);
        let y = var(&f, &v, 1);
        let d = x.try_sub(&y).unwrap();
        let n = y.try_sub(&x).unwrap();
        assert!(d.try_add(&n).unwrap().is_zero());
    }

    #[test]
    fn order_examples_from_the_book() {
        // x^2 y vs x y^3 with x > y: lex picks x^2 y, degrevlex picks x y^3
        let a = Monomial::from_exponents(&[2, 1]);
        let b = Monomial::from_exponents(&[1, 3]);
        assert_eq!(MonomialOrder::Lex.compare(&a, &b), Ordering::Greater);
        assert_eq!(MonomialOrder::DegRevLex.compare(&a, &b), Ordering::Less);
    }

    #[test]
    fn degrevlex_ties_break_reverse() {
        // with x > y > z: x z vs y^2 (both degree 2): degrevlex compares the
        // last differing exponent, smaller wins, so y^2 > x z
        let xz = Monomial::from_exponents(&[1, 0, 1]);
        let y2 = Monomial::from_exponents(&[0, 2, 0]);
        assert_eq!(MonomialOrder::DegRevLex.compare(&y2, &xz), Ordering::Greater);
    }

    #[test]
    fn sorting_twice_is_identity() {
        let (f, v) = setup();
        let x = var(&f, &v, 0);
        let y = var(&f, &v, 1);
        let p = x
            .try_mul(&x)
            .unwrap()
            .try_add(&y.try_mul(&y).unwrap())
            .unwrap()
            .try_add(&x.try_mul(&y).unwrap())
            .unwrap();
        let q = p.with_order(MonomialOrder::DegRevLex);
        assert_eq!(q.with_order(MonomialOrder::Lex), p);
    }

    #[test]
    fn eval_is_multiplicative() {
        let (f, v) = setup();
        let x = var(&f, &v, 0);
        let y = var(&f, &v, 1);
        let p = x.try_add(&y).unwrap();
        let q = x.try_sub(&y).unwrap();
        let pt = [f.from_integer(3), f.from_integer(2)];
        let lhs = p.try_mul(&q).unwrap().eval(&pt).unwrap();
        let rhs = &p.eval(&pt).unwrap() * &q.eval(&pt).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn size_limit_trips() {
        let (f, v) = setup();
        let x = var(&f, &v, 0);
        let y = var(&f, &v, 1);
        let p = x.try_add(&y).unwrap();
        // (x+y)^2 has 3 terms > limit 2
        assert!(matches!(
            p.mul_limited(&p, 2),
            Err(Error::SizeLimitExceeded { .. })
        ));
    }

    #[test]
    fn display_round_shape() {
        let (f, v) = setup();
        let x = var(&f, &v, 0);
        let y = var(&f, &v, 1);
        let p = x
            .try_mul(&x)
            .unwrap()
            .try_sub(&y.scale(&f.from_rational(crate::field::Rational::new(
                3.into(),
                2.into(),
            ))))
            .unwrap();
        assert_eq!(p.to_string(), "x^2 - 3/2*y");
    }
}
