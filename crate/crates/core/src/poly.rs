//! Sparse polynomials over `R` and elements of free modules `F = S^r`.
//!
//! Elements are plain term lists kept strictly descending under the order of
//! the [`FreeModule`] that produced them; the module carries the ring,
//! variable names, rank and order needed to do arithmetic.

use std::cmp::Ordering;

use crate::coeff::{RingElement, RingSpec};
use crate::error::{AlgebraError, Result};
use crate::order::{LeadingData, ModuleOrder, MonomialOrder};
use crate::scalar::Int;

/// Exponent vector of a monomial in `S`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    /// The variable `x_i` in a ring with `nvars` variables.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    /// True when `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other`, failing when some exponent would go negative.
    pub fn div(&self, other: &Monomial) -> Result<Monomial> {
        if !other.divides(self) {
            return Err(AlgebraError::NotDivisible);
        }
        Ok(self.div_unchecked(other))
    }

    pub(crate) fn div_unchecked(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

/// `coeff * mono * e_basis` (basis is 0-based).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term<I> {
    pub coeff: RingElement<I>,
    pub mono: Monomial,
    pub basis: usize,
}

impl<I> Term<I> {
    pub fn new(coeff: RingElement<I>, mono: Monomial, basis: usize) -> Self {
        Term { coeff, mono, basis }
    }
}

/// Element of a free module, terms strictly descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleElement<I> {
    terms: Vec<Term<I>>,
}

impl<I: Int> ModuleElement<I> {
    pub fn zero() -> Self {
        ModuleElement { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[Term<I>] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Term<I>> {
        self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term<I>> {
        self.terms.first()
    }

    /// Largest total degree among the terms.
    pub fn degree(&self) -> u64 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }
}

/// `coeff * mono` in `S`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolyTerm<I> {
    pub coeff: RingElement<I>,
    pub mono: Monomial,
}

/// Polynomial in `S`, terms strictly descending under the base order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial<I> {
    terms: Vec<PolyTerm<I>>,
}

impl<I: Int> Polynomial<I> {
    pub fn zero() -> Self {
        Polynomial { terms: Vec::new() }
    }

    pub fn terms(&self) -> &[PolyTerm<I>] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `lti(p)`: the leading term under the induced order on `S`.
    pub fn leading(&self) -> Option<&PolyTerm<I>> {
        self.terms.first()
    }

    pub fn degree(&self) -> u64 {
        self.terms.iter().map(|t| t.mono.degree()).max().unwrap_or(0)
    }

    /// Appends a term that is smaller than every present term.
    pub(crate) fn push_smaller(&mut self, t: PolyTerm<I>) {
        if !t.coeff.is_zero() {
            self.terms.push(t);
        }
    }
}

/// Ambient free module `S^rank` with its coefficient ring, variables and order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeModule<I> {
    ring: RingSpec<I>,
    vars: Vec<String>,
    rank: usize,
    order: ModuleOrder,
    basis_symbol: String,
}

impl<I: Int> FreeModule<I> {
    pub fn new(ring: RingSpec<I>, vars: Vec<String>, rank: usize, order: ModuleOrder) -> Result<Self> {
        if rank == 0 {
            return Err(AlgebraError::Incompatible("rank must be positive".into()));
        }
        if order.base().nvars() != vars.len() {
            return Err(AlgebraError::Incompatible(format!(
                "order ranks {} variables but {} are declared",
                order.base().nvars(),
                vars.len()
            )));
        }
        if let Some(r) = order.schreyer_rank() {
            if r != rank {
                return Err(AlgebraError::Incompatible(format!(
                    "Schreyer order is induced by {r} generators but the rank is {rank}"
                )));
            }
        }
        Ok(FreeModule {
            ring,
            vars,
            rank,
            order,
            basis_symbol: "e".into(),
        })
    }

    /// Module over variables named `x1..xn`.
    pub fn with_default_vars(ring: RingSpec<I>, nvars: usize, rank: usize, order: ModuleOrder) -> Result<Self> {
        Self::new(ring, (1..=nvars).map(|i| format!("x{i}")).collect(), rank, order)
    }

    /// A module over the same ring and variables with a different rank and order.
    pub fn sibling(&self, rank: usize, order: ModuleOrder, basis_symbol: &str) -> Result<Self> {
        let mut m = FreeModule::new(self.ring.clone(), self.vars.clone(), rank, order)?;
        m.basis_symbol = basis_symbol.to_string();
        Ok(m)
    }

    pub fn ring(&self) -> &RingSpec<I> {
        &self.ring
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn base_order(&self) -> &MonomialOrder {
        self.order.base()
    }

    pub fn basis_symbol(&self) -> &str {
        &self.basis_symbol
    }

    pub fn set_basis_symbol(&mut self, symbol: &str) {
        self.basis_symbol = symbol.to_string();
    }

    pub fn cmp_terms(&self, a: &Term<I>, b: &Term<I>) -> Ordering {
        self.order.cmp_terms(a, b)
    }

    fn validate_term(&self, t: &Term<I>) -> Result<()> {
        self.ring.validate(&t.coeff)?;
        if t.mono.nvars() != self.nvars() {
            return Err(AlgebraError::Incompatible(format!(
                "monomial has {} exponents, module has {} variables",
                t.mono.nvars(),
                self.nvars()
            )));
        }
        if t.basis >= self.rank {
            return Err(AlgebraError::Incompatible(format!(
                "basis index {} out of range for rank {}",
                t.basis + 1,
                self.rank
            )));
        }
        Ok(())
    }

    /// Checks that `f` lives in this module and is stored canonically.
    pub fn validate(&self, f: &ModuleElement<I>) -> Result<()> {
        for t in &f.terms {
            self.validate_term(t)?;
            if t.coeff.is_zero() {
                return Err(AlgebraError::Incompatible("stored zero coefficient".into()));
            }
        }
        for w in f.terms.windows(2) {
            if self.cmp_terms(&w[0], &w[1]) != Ordering::Greater {
                return Err(AlgebraError::Incompatible("terms are not strictly descending".into()));
            }
        }
        Ok(())
    }

    pub fn validate_poly(&self, p: &Polynomial<I>) -> Result<()> {
        for t in &p.terms {
            self.ring.validate(&t.coeff)?;
            if t.mono.nvars() != self.nvars() {
                return Err(AlgebraError::Incompatible("monomial arity mismatch".into()));
            }
        }
        Ok(())
    }

    /// Builds an element from arbitrary terms: sorts, merges, drops zeros.
    pub fn element(&self, terms: Vec<Term<I>>) -> Result<ModuleElement<I>> {
        for t in &terms {
            self.validate_term(t)?;
        }
        Ok(self.normalize(terms))
    }

    pub(crate) fn normalize(&self, mut terms: Vec<Term<I>>) -> ModuleElement<I> {
        terms.sort_by(|a, b| self.cmp_terms(b, a));
        let mut out: Vec<Term<I>> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono && last.basis == t.basis => {
                    last.coeff = self.ring.add(&last.coeff, &t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        ModuleElement { terms: out }
    }

    /// Wraps terms that are already sorted, merged and nonzero.
    pub(crate) fn normalize_sorted(&self, terms: Vec<Term<I>>) -> ModuleElement<I> {
        debug_assert!(terms
            .windows(2)
            .all(|w| self.cmp_terms(&w[0], &w[1]) == Ordering::Greater));
        debug_assert!(terms.iter().all(|t| !t.coeff.is_zero()));
        ModuleElement { terms }
    }

    /// Re-establishes canonical storage; the identity on stored elements.
    pub fn renormalize(&self, f: &ModuleElement<I>) -> ModuleElement<I> {
        let terms = f
            .terms
            .iter()
            .map(|t| {
                Term::new(
                    self.ring.normalize(t.coeff.components().to_vec()).expect("arity"),
                    t.mono.clone(),
                    t.basis,
                )
            })
            .collect();
        self.normalize(terms)
    }

    /// The standard basis vector `e_i` (0-based).
    pub fn basis_vector(&self, i: usize) -> ModuleElement<I> {
        ModuleElement {
            terms: vec![Term::new(self.ring.one(), Monomial::one(self.nvars()), i)],
        }
    }

    /// Single-term element; zero when the coefficient is zero.
    pub fn monomial_element(&self, coeff: RingElement<I>, mono: Monomial, basis: usize) -> ModuleElement<I> {
        if coeff.is_zero() {
            ModuleElement::zero()
        } else {
            ModuleElement {
                terms: vec![Term::new(coeff, mono, basis)],
            }
        }
    }

    pub fn leading(&self, f: &ModuleElement<I>) -> Option<LeadingData<I>> {
        f.terms.first().map(|t| LeadingData { term: t.clone() })
    }

    fn check_pair(&self, f: &ModuleElement<I>, g: &ModuleElement<I>) -> Result<()> {
        self.validate(f)?;
        self.validate(g)
    }

    pub fn add(&self, f: &ModuleElement<I>, g: &ModuleElement<I>) -> Result<ModuleElement<I>> {
        self.check_pair(f, g)?;
        Ok(self.add_unchecked(f, g))
    }

    pub fn sub(&self, f: &ModuleElement<I>, g: &ModuleElement<I>) -> Result<ModuleElement<I>> {
        self.check_pair(f, g)?;
        Ok(self.sub_unchecked(f, g))
    }

    pub fn scalar_mul(&self, c: &RingElement<I>, f: &ModuleElement<I>) -> Result<ModuleElement<I>> {
        self.ring.validate(c)?;
        self.validate(f)?;
        Ok(self.scalar_mul_unchecked(c, f))
    }

    /// `(c * u) * f` for a single term `c * u` of `S`.
    pub fn term_mul(&self, c: &RingElement<I>, u: &Monomial, f: &ModuleElement<I>) -> Result<ModuleElement<I>> {
        self.ring.validate(c)?;
        if u.nvars() != self.nvars() {
            return Err(AlgebraError::Incompatible("monomial arity mismatch".into()));
        }
        self.validate(f)?;
        Ok(self.term_mul_unchecked(c, u, f))
    }

    pub fn poly_mul(&self, p: &Polynomial<I>, f: &ModuleElement<I>) -> Result<ModuleElement<I>> {
        self.validate_poly(p)?;
        self.validate(f)?;
        Ok(self.poly_mul_unchecked(p, f))
    }

    pub fn neg(&self, f: &ModuleElement<I>) -> ModuleElement<I> {
        ModuleElement {
            terms: f
                .terms
                .iter()
                .map(|t| Term::new(self.ring.neg(&t.coeff), t.mono.clone(), t.basis))
                .collect(),
        }
    }

    pub(crate) fn add_unchecked(&self, f: &ModuleElement<I>, g: &ModuleElement<I>) -> ModuleElement<I> {
        self.merge(f, g, false)
    }

    pub(crate) fn sub_unchecked(&self, f: &ModuleElement<I>, g: &ModuleElement<I>) -> ModuleElement<I> {
        self.merge(f, g, true)
    }

    fn merge(&self, f: &ModuleElement<I>, g: &ModuleElement<I>, negate: bool) -> ModuleElement<I> {
        let mut out = Vec::with_capacity(f.terms.len() + g.terms.len());
        let (mut i, mut j) = (0, 0);
        let other = |t: &Term<I>| {
            if negate {
                Term::new(self.ring.neg(&t.coeff), t.mono.clone(), t.basis)
            } else {
                t.clone()
            }
        };
        while i < f.terms.len() && j < g.terms.len() {
            let (a, b) = (&f.terms[i], &g.terms[j]);
            match self.cmp_terms(a, b) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other(b));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        self.ring.sub(&a.coeff, &b.coeff)
                    } else {
                        self.ring.add(&a.coeff, &b.coeff)
                    };
                    if !c.is_zero() {
                        out.push(Term::new(c, a.mono.clone(), a.basis));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(f.terms[i..].iter().cloned());
        out.extend(g.terms[j..].iter().map(other));
        ModuleElement { terms: out }
    }

    pub(crate) fn scalar_mul_unchecked(&self, c: &RingElement<I>, f: &ModuleElement<I>) -> ModuleElement<I> {
        ModuleElement {
            terms: f
                .terms
                .iter()
                .filter_map(|t| {
                    let k = self.ring.mul(c, &t.coeff);
                    (!k.is_zero()).then(|| Term::new(k, t.mono.clone(), t.basis))
                })
                .collect(),
        }
    }

    /// Multiplication by a term preserves the order, so no re-sort is needed.
    pub(crate) fn term_mul_unchecked(
        &self,
        c: &RingElement<I>,
        u: &Monomial,
        f: &ModuleElement<I>,
    ) -> ModuleElement<I> {
        ModuleElement {
            terms: f
                .terms
                .iter()
                .filter_map(|t| {
                    let k = self.ring.mul(c, &t.coeff);
                    (!k.is_zero()).then(|| Term::new(k, t.mono.mul(u), t.basis))
                })
                .collect(),
        }
    }

    pub(crate) fn poly_mul_unchecked(&self, p: &Polynomial<I>, f: &ModuleElement<I>) -> ModuleElement<I> {
        let mut terms = Vec::with_capacity(p.terms.len() * f.terms.len());
        for pt in &p.terms {
            for t in &f.terms {
                let k = self.ring.mul(&pt.coeff, &t.coeff);
                if !k.is_zero() {
                    terms.push(Term::new(k, t.mono.mul(&pt.mono), t.basis));
                }
            }
        }
        self.normalize(terms)
    }

    /// `sum_j coeffs_j * gens_j` in this module.
    pub fn combine(&self, coeffs: &[Polynomial<I>], gens: &[ModuleElement<I>]) -> Result<ModuleElement<I>> {
        if coeffs.len() != gens.len() {
            return Err(AlgebraError::Incompatible(format!(
                "{} multipliers for {} generators",
                coeffs.len(),
                gens.len()
            )));
        }
        for (p, g) in coeffs.iter().zip(gens) {
            self.validate_poly(p)?;
            self.validate(g)?;
        }
        Ok(self.combine_unchecked(coeffs.iter().zip(gens)))
    }

    pub(crate) fn combine_unchecked<'a>(
        &self,
        pairs: impl Iterator<Item = (&'a Polynomial<I>, &'a ModuleElement<I>)>,
    ) -> ModuleElement<I> {
        let mut terms = Vec::new();
        for (p, g) in pairs {
            for pt in &p.terms {
                for t in &g.terms {
                    let k = self.ring.mul(&pt.coeff, &t.coeff);
                    if !k.is_zero() {
                        terms.push(Term::new(k, t.mono.mul(&pt.mono), t.basis));
                    }
                }
            }
        }
        self.normalize(terms)
    }

    /// Image of `r` (an element of a module whose basis maps to `images`)
    /// in this module: `sum c * u * images[l]` over the terms `c u g_l` of `r`.
    pub fn substitute(&self, r: &ModuleElement<I>, images: &[ModuleElement<I>]) -> Result<ModuleElement<I>> {
        if let Some(t) = r.terms.iter().find(|t| t.basis >= images.len()) {
            return Err(AlgebraError::Incompatible(format!(
                "relation mentions basis element {} but only {} images are given",
                t.basis + 1,
                images.len()
            )));
        }
        for g in images {
            self.validate(g)?;
        }
        Ok(self.substitute_unchecked(r, images))
    }

    pub(crate) fn substitute_unchecked(&self, r: &ModuleElement<I>, images: &[ModuleElement<I>]) -> ModuleElement<I> {
        let mut terms = Vec::new();
        for rt in &r.terms {
            for t in &images[rt.basis].terms {
                let k = self.ring.mul(&rt.coeff, &t.coeff);
                if !k.is_zero() {
                    terms.push(Term::new(k, t.mono.mul(&rt.mono), t.basis));
                }
            }
        }
        self.normalize(terms)
    }

    /// Splits `f` into its coordinate polynomials, one per basis element.
    pub fn coordinates(&self, f: &ModuleElement<I>) -> Vec<Polynomial<I>> {
        let mut out = vec![Polynomial::zero(); self.rank];
        // Within a fixed basis element the module order restricts to the base
        // order, so the filtered terms are already descending.
        for t in &f.terms {
            out[t.basis].terms.push(PolyTerm {
                coeff: t.coeff.clone(),
                mono: t.mono.clone(),
            });
        }
        out
    }

    /// Inverse of [`coordinates`](Self::coordinates).
    pub fn from_coordinates(&self, coords: &[Polynomial<I>]) -> ModuleElement<I> {
        let terms = coords
            .iter()
            .enumerate()
            .flat_map(|(i, p)| {
                p.terms
                    .iter()
                    .map(move |t| Term::new(t.coeff.clone(), t.mono.clone(), i))
            })
            .collect();
        self.normalize(terms)
    }

    /// Builds a polynomial from arbitrary terms under the base order.
    pub fn polynomial(&self, terms: Vec<PolyTerm<I>>) -> Polynomial<I> {
        let base = self.base_order();
        let mut terms = terms;
        terms.sort_by(|a, b| base.cmp(&b.mono, &a.mono));
        let mut out: Vec<PolyTerm<I>> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => last.coeff = self.ring.add(&last.coeff, &t.coeff),
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Polynomial { terms: out }
    }

    pub fn poly_add(&self, p: &Polynomial<I>, q: &Polynomial<I>) -> Polynomial<I> {
        self.polynomial(p.terms.iter().chain(&q.terms).cloned().collect())
    }

    pub fn poly_scale(&self, c: &RingElement<I>, u: &Monomial, p: &Polynomial<I>) -> Polynomial<I> {
        Polynomial {
            terms: p
                .terms
                .iter()
                .filter_map(|t| {
                    let k = self.ring.mul(c, &t.coeff);
                    (!k.is_zero()).then(|| PolyTerm {
                        coeff: k,
                        mono: t.mono.mul(u),
                    })
                })
                .collect(),
        }
    }

    pub fn poly_neg(&self, p: &Polynomial<I>) -> Polynomial<I> {
        self.poly_scale(&self.ring.neg(&self.ring.one()), &Monomial::one(self.nvars()), p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::MonomialOrderKind;
    use proptest::prelude::*;

    type M = FreeModule<i64>;

    fn module(moduli: &[u64], nvars: usize, rank: usize) -> M {
        let ring = RingSpec::from_moduli(moduli).unwrap();
        let order = ModuleOrder::pot(MonomialOrder::new(MonomialOrderKind::Lex, nvars));
        M::with_default_vars(ring, nvars, rank, order).unwrap()
    }

    fn term(m: &M, c: &[i64], e: &[u32], basis: usize) -> Term<i64> {
        Term::new(m.ring().element(c).unwrap(), Monomial::new(e.to_vec()), basis)
    }

    #[test]
    fn zero_divisor_products_are_dropped() {
        let m = module(&[2, 4, 8], 2, 1);
        let f = m
            .element(vec![term(&m, &[1, 2, 4], &[0, 1], 0), term(&m, &[0, 3, 0], &[0, 0], 0)])
            .unwrap();
        let c = m.ring().element(&[0, 2, 2]).unwrap();
        let got = m.scalar_mul(&c, &f).unwrap();
        assert_eq!(got, m.element(vec![term(&m, &[0, 2, 0], &[0, 0], 0)]).unwrap());
        assert_eq!(got.leading_term().unwrap().mono, Monomial::one(2));
    }

    #[test]
    fn cancellation_and_term_mul() {
        let m = module(&[0, 0], 2, 1);
        let f = m
            .element(vec![term(&m, &[2, 0], &[2, 1], 0), term(&m, &[1, 2], &[0, 0], 0)])
            .unwrap();
        let minus = m.scalar_mul(&m.ring().element(&[-1, -1]).unwrap(), &f).unwrap();
        assert!(m.add(&f, &minus).unwrap().is_zero());

        let one = m.element(vec![term(&m, &[1, 0], &[0, 0], 0)]).unwrap();
        let y = Monomial::new(vec![0, 1]);
        let got = m.term_mul(&m.ring().one(), &y, &one).unwrap();
        assert_eq!(got.terms(), &[term(&m, &[1, 0], &[0, 1], 0)]);
    }

    #[test]
    fn monomial_lcm_and_div() {
        let x2 = Monomial::new(vec![2, 0]);
        let y = Monomial::new(vec![0, 1]);
        assert_eq!(x2.lcm(&y), Monomial::new(vec![2, 1]));
        let x2y = Monomial::new(vec![2, 1]);
        assert_eq!(x2y.div(&x2y).unwrap(), Monomial::one(2));
        assert_eq!(
            Monomial::var(2, 0).div(&Monomial::var(2, 1)),
            Err(AlgebraError::NotDivisible)
        );
    }

    #[test]
    fn ambient_mismatch_is_rejected() {
        let m = module(&[4], 2, 1);
        let bad_basis = ModuleElement {
            terms: vec![term(&m, &[1], &[0, 0], 1)],
        };
        assert!(matches!(
            m.add(&bad_basis, &ModuleElement::zero()),
            Err(AlgebraError::Incompatible(_))
        ));
        let bad_arity = ModuleElement {
            terms: vec![Term::new(
                RingSpec::<i64>::from_moduli(&[4, 4]).unwrap().one(),
                Monomial::one(2),
                0,
            )],
        };
        assert!(matches!(
            m.add(&bad_arity, &ModuleElement::zero()),
            Err(AlgebraError::ArityMismatch { .. })
        ));
        assert!(m.scalar_mul(&m.ring().one(), &bad_basis).is_err());
        assert!(M::with_default_vars(
            RingSpec::from_moduli(&[4]).unwrap(),
            2,
            0,
            ModuleOrder::pot(MonomialOrder::new(MonomialOrderKind::Lex, 2))
        )
        .is_err());
    }

    #[test]
    fn substitution_and_coordinates() {
        let m = module(&[0], 2, 2);
        let f = m
            .element(vec![term(&m, &[3], &[1, 0], 0), term(&m, &[1], &[0, 1], 1)])
            .unwrap();
        let coords = m.coordinates(&f);
        assert_eq!(coords.len(), 2);
        assert_eq!(m.from_coordinates(&coords), f);
        let l = module(&[0], 2, 2);
        let r = l
            .element(vec![term(&l, &[1], &[0, 1], 0), term(&l, &[-1], &[0, 0], 1)])
            .unwrap();
        let g = m.element(vec![term(&m, &[1], &[0, 1], 0)]).unwrap();
        let yg = m.element(vec![term(&m, &[1], &[0, 2], 0)]).unwrap();
        // y*g - yg = 0
        assert!(m.substitute(&r, &[g, yg]).unwrap().is_zero());
    }

    fn arb_elem(m: M) -> impl Strategy<Value = ModuleElement<i64>> {
        prop::collection::vec(
            (
                prop::collection::vec(-9i64..9, 2),
                prop::collection::vec(0u32..3, 2),
                0usize..2,
            ),
            0..5,
        )
        .prop_map(move |ts| {
            m.element(
                ts.into_iter()
                    .map(|(c, e, b)| Term::new(m.ring().element(&c).unwrap(), Monomial::new(e), b))
                    .collect(),
            )
            .unwrap()
        })
    }

    proptest! {
        #[test]
        fn module_axioms(
            f in arb_elem(module(&[6, 0], 2, 2)),
            g in arb_elem(module(&[6, 0], 2, 2)),
            h in arb_elem(module(&[6, 0], 2, 2)),
            a in prop::collection::vec(-9i64..9, 2),
            b in prop::collection::vec(-9i64..9, 2),
            u in prop::collection::vec(0u32..3, 2),
        ) {
            let m = module(&[6, 0], 2, 2);
            let (a, b) = (m.ring().element(&a).unwrap(), m.ring().element(&b).unwrap());
            let u = Monomial::new(u);
            let add = |x: &ModuleElement<i64>, y: &ModuleElement<i64>| m.add(x, y).unwrap();
            prop_assert_eq!(add(&add(&f, &g), &h), add(&f, &add(&g, &h)));
            prop_assert_eq!(add(&f, &g), add(&g, &f));
            prop_assert_eq!(
                m.scalar_mul(&a, &add(&f, &g)).unwrap(),
                add(&m.scalar_mul(&a, &f).unwrap(), &m.scalar_mul(&a, &g).unwrap())
            );
            prop_assert_eq!(
                m.scalar_mul(&m.ring().mul(&a, &b), &f).unwrap(),
                m.scalar_mul(&a, &m.scalar_mul(&b, &f).unwrap()).unwrap()
            );
            prop_assert_eq!(
                m.scalar_mul(&m.ring().add(&a, &b), &f).unwrap(),
                add(&m.scalar_mul(&a, &f).unwrap(), &m.scalar_mul(&b, &f).unwrap())
            );
            prop_assert_eq!(
                m.term_mul(&a, &u, &add(&f, &g)).unwrap(),
                add(&m.term_mul(&a, &u, &f).unwrap(), &m.term_mul(&a, &u, &g).unwrap())
            );
            prop_assert!(m.sub(&f, &f).unwrap().is_zero());
            prop_assert!(m.validate(&m.term_mul(&a, &u, &f).unwrap()).is_ok());
            prop_assert_eq!(m.renormalize(&f), f.clone());
        }
    }
}
