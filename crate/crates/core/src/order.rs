//! Monomial orders on `S` and their extensions to free modules.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::coeff::RingElement;
use crate::error::{AlgebraError, Result};
use crate::poly::{Monomial, Term};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrderKind {
    Lex,
    GrLex,
    GrevLex,
}

impl MonomialOrderKind {
    pub fn keyword(self) -> &'static str {
        match self {
            MonomialOrderKind::Lex => "lex",
            MonomialOrderKind::GrLex => "grlex",
            MonomialOrderKind::GrevLex => "grevlex",
        }
    }
}

impl fmt::Display for MonomialOrderKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// A monomial order on `S`: a kind plus variable precedence.
///
/// `precedence[0]` is the most significant variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialOrder {
    kind: MonomialOrderKind,
    precedence: Vec<usize>,
}

impl MonomialOrder {
    /// Variables ranked in declaration sequence.
    pub fn new(kind: MonomialOrderKind, nvars: usize) -> Self {
        MonomialOrder {
            kind,
            precedence: (0..nvars).collect(),
        }
    }

    pub fn with_precedence(kind: MonomialOrderKind, precedence: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; precedence.len()];
        for &v in &precedence {
            if v >= seen.len() || seen[v] {
                return Err(AlgebraError::Incompatible(format!(
                    "precedence {precedence:?} is not a permutation"
                )));
            }
            seen[v] = true;
        }
        Ok(MonomialOrder { kind, precedence })
    }

    pub fn kind(&self) -> MonomialOrderKind {
        self.kind
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn nvars(&self) -> usize {
        self.precedence.len()
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (ea, eb) = (a.exponents(), b.exponents());
        let lex = || {
            self.precedence
                .iter()
                .map(|&v| ea[v].cmp(&eb[v]))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        };
        match self.kind {
            MonomialOrderKind::Lex => lex(),
            MonomialOrderKind::GrLex => a.degree().cmp(&b.degree()).then_with(lex),
            MonomialOrderKind::GrevLex => a.degree().cmp(&b.degree()).then_with(|| {
                self.precedence
                    .iter()
                    .rev()
                    .map(|&v| eb[v].cmp(&ea[v]))
                    .find(|o| o.is_ne())
                    .unwrap_or(Ordering::Equal)
            }),
        }
    }
}

/// Extension of a monomial order to `F = S^r`.
///
/// Basis elements are ranked `e_1 > e_2 > ... > e_r` wherever position
/// matters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleOrder {
    /// Compare basis positions first, then monomials.
    PositionOverTerm(MonomialOrder),
    /// Compare monomials first, then basis positions.
    TermOverPosition(MonomialOrder),
    /// Order induced on a relation module by generators of a parent module.
    Schreyer(Arc<SchreyerOrder>),
}

/// `u g_i < v g_j` iff `LM(u f_i) < LM(v f_j)`, or the two agree and `j < i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchreyerOrder {
    leads: Vec<(Monomial, usize)>,
    parent: ModuleOrder,
}

impl SchreyerOrder {
    /// Leading module monomials `(lm(f_i), basis(f_i))` of the inducing generators.
    pub fn leads(&self) -> &[(Monomial, usize)] {
        &self.leads
    }

    pub fn parent(&self) -> &ModuleOrder {
        &self.parent
    }
}

impl ModuleOrder {
    pub fn pot(base: MonomialOrder) -> Self {
        ModuleOrder::PositionOverTerm(base)
    }

    pub fn top(base: MonomialOrder) -> Self {
        ModuleOrder::TermOverPosition(base)
    }

    /// Schreyer order induced by generators with the given leading module
    /// monomials, compared under `parent`.
    pub fn schreyer(leads: Vec<(Monomial, usize)>, parent: ModuleOrder) -> Self {
        ModuleOrder::Schreyer(Arc::new(SchreyerOrder { leads, parent }))
    }

    /// The order this module order induces on `S`.
    pub fn base(&self) -> &MonomialOrder {
        match self {
            ModuleOrder::PositionOverTerm(b) | ModuleOrder::TermOverPosition(b) => b,
            ModuleOrder::Schreyer(s) => s.parent.base(),
        }
    }

    /// Compares the module monomials `u e_i` and `v e_j`.
    pub fn cmp(&self, u: &Monomial, i: usize, v: &Monomial, j: usize) -> Ordering {
        match self {
            ModuleOrder::PositionOverTerm(b) => j.cmp(&i).then_with(|| b.cmp(u, v)),
            ModuleOrder::TermOverPosition(b) => b.cmp(u, v).then_with(|| j.cmp(&i)),
            ModuleOrder::Schreyer(s) => {
                let (li, bi) = &s.leads[i];
                let (lj, bj) = &s.leads[j];
                s.parent.cmp(&u.mul(li), *bi, &v.mul(lj), *bj).then_with(|| j.cmp(&i))
            }
        }
    }

    pub fn cmp_terms<I>(&self, a: &Term<I>, b: &Term<I>) -> Ordering {
        self.cmp(&a.mono, a.basis, &b.mono, b.basis)
    }

    /// Number of basis elements a Schreyer order expects, if any.
    pub fn schreyer_rank(&self) -> Option<usize> {
        match self {
            ModuleOrder::Schreyer(s) => Some(s.leads.len()),
            _ => None,
        }
    }
}

/// Leading data of a nonzero module element.
///
/// The zero element has no leading data; `Option<LeadingData>` orders `None`
/// below every term, matching the convention `LT(0) = 0 < LT(f)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeadingData<I> {
    /// `LT(f) = lc * lm * e_basis`.
    pub term: Term<I>,
}

impl<I: Clone> LeadingData<I> {
    pub fn lc(&self) -> &RingElement<I> {
        &self.term.coeff
    }

    pub fn lm(&self) -> &Monomial {
        &self.term.mono
    }

    pub fn basis(&self) -> usize {
        self.term.basis
    }

    /// `LM(f) = lm * e_basis`.
    pub fn module_monomial(&self) -> (Monomial, usize) {
        (self.term.mono.clone(), self.term.basis)
    }
}
