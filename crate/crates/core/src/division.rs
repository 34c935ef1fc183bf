//! Division of a module element by an ordered tuple of divisors.
//!
//! Each step looks at `LT(g)`. If it lies in the module spanned by the
//! leading terms of the divisors, the lexicographically smallest indicator
//! tuple `(i_1, ..., i_m)` that still generates it is chosen and the matching
//! combination is subtracted; otherwise `LT(g)` moves to the remainder. The
//! smallest tuple is found greedily: divisor `j` is left out whenever the
//! leading coefficient stays reachable from the divisors already kept plus
//! all later candidates. Feasibility is monotone in the generator set, so the
//! greedy pass lands on the lex-least feasible tuple with one membership
//! solve per candidate.

use std::cmp::Ordering;

use crate::coeff::RingElement;
use crate::poly::{FreeModule, ModuleElement, Monomial, PolyTerm, Polynomial, Term};
use crate::scalar::Int;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TraceAction {
    /// `LT(g)` was cancelled using the divisors flagged in the indicator tuple.
    Reduced { indicators: Vec<bool> },
    /// `LT(g)` was not generated and moved to the remainder.
    ToRemainder,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TraceStep {
    pub step: usize,
    pub mono: Monomial,
    pub basis: usize,
    pub action: TraceAction,
}

/// `f = sum quotients_j * divisors_j + remainder`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionResult<I> {
    pub quotients: Vec<Polynomial<I>>,
    pub remainder: ModuleElement<I>,
    pub trace: Vec<TraceStep>,
}

/// Leading data of the divisors, computed once per division.
pub(crate) struct Divisors<'a, I> {
    module: &'a FreeModule<I>,
    elems: &'a [ModuleElement<I>],
}

impl<'a, I: Int> Divisors<'a, I> {
    pub(crate) fn new(module: &'a FreeModule<I>, elems: &'a [ModuleElement<I>]) -> Self {
        Divisors { module, elems }
    }

    fn lead(&self, j: usize) -> Option<&Term<I>> {
        self.elems[j].leading_term()
    }

    /// Divisors whose leading module monomial divides `u e_basis`.
    fn candidates(&self, mono: &Monomial, basis: usize) -> Vec<usize> {
        (0..self.elems.len())
            .filter(|&j| self.lead(j).is_some_and(|t| t.basis == basis && t.mono.divides(mono)))
            .collect()
    }

    fn solve(&self, c: &RingElement<I>, set: &[usize]) -> Option<Vec<RingElement<I>>> {
        let lcs: Vec<&RingElement<I>> = set.iter().map(|&k| &self.lead(k).expect("candidate").coeff).collect();
        self.module.ring().solve_membership(c, &lcs)
    }

    /// Lex-least indicator selection for cancelling the term `t`.
    fn select(&self, t: &Term<I>) -> Option<(Vec<usize>, Vec<RingElement<I>>)> {
        let cands = self.candidates(&t.mono, t.basis);
        if cands.is_empty() || self.solve(&t.coeff, &cands).is_none() {
            return None;
        }
        let mut chosen: Vec<usize> = Vec::new();
        for (pos, &j) in cands.iter().enumerate() {
            let trial: Vec<usize> = chosen.iter().chain(&cands[pos + 1..]).copied().collect();
            if self.solve(&t.coeff, &trial).is_none() {
                chosen.push(j);
            }
        }
        let coeffs = self
            .solve(&t.coeff, &chosen)
            .expect("selected divisors generate the term");
        Some((chosen, coeffs))
    }

    /// True when `t` lies in the module generated by the divisors' leading terms.
    pub(crate) fn generates(&self, t: &Term<I>) -> bool {
        let cands = self.candidates(&t.mono, t.basis);
        !cands.is_empty() && self.solve(&t.coeff, &cands).is_some()
    }

    pub(crate) fn divide(&self, f: &ModuleElement<I>, record: bool) -> DivisionResult<I> {
        let module = self.module;
        let m = self.elems.len();
        let mut quotients = vec![Polynomial::zero(); if record { m } else { 0 }];
        let mut trace = Vec::new();
        let mut remainder: Vec<Term<I>> = Vec::new();
        let mut g = f.clone();
        let mut step = 0;
        while let Some(lt) = g.leading_term().cloned() {
            step += 1;
            match self.select(&lt) {
                Some((chosen, coeffs)) => {
                    let mut parts = Vec::new();
                    for (&j, c) in chosen.iter().zip(&coeffs) {
                        let h = lt.mono.div_unchecked(&self.lead(j).expect("candidate").mono);
                        parts.extend(module.term_mul_unchecked(c, &h, &self.elems[j]).into_terms());
                        if record {
                            quotients[j].push_smaller(PolyTerm {
                                coeff: c.clone(),
                                mono: h,
                            });
                        }
                    }
                    g = module.sub_unchecked(&g, &module.normalize(parts));
                    debug_assert!(g
                        .leading_term()
                        .is_none_or(|t| module.cmp_terms(t, &lt) == Ordering::Less));
                    if record {
                        let mut indicators = vec![false; m];
                        for &j in &chosen {
                            indicators[j] = true;
                        }
                        trace.push(TraceStep {
                            step,
                            mono: lt.mono.clone(),
                            basis: lt.basis,
                            action: TraceAction::Reduced { indicators },
                        });
                    }
                }
                None => {
                    let mut rest = g.into_terms();
                    remainder.push(rest.remove(0));
                    g = module.normalize_sorted(rest);
                    if record {
                        trace.push(TraceStep {
                            step,
                            mono: lt.mono,
                            basis: lt.basis,
                            action: TraceAction::ToRemainder,
                        });
                    }
                }
            }
        }
        DivisionResult {
            quotients,
            remainder: module.normalize_sorted(remainder),
            trace,
        }
    }
}

/// Divides `f` by the ordered tuple `divisors`.
///
/// Zero divisors are allowed and never used. The result satisfies
/// `f = sum q_j f_j + r`, `lmi(q_j) LM(f_j) <= LM(f)`, and no term of `r`
/// lies in the module generated by the divisors' leading terms.
pub fn divide<I: Int>(
    module: &FreeModule<I>,
    f: &ModuleElement<I>,
    divisors: &[ModuleElement<I>],
) -> DivisionResult<I> {
    Divisors::new(module, divisors).divide(f, true)
}

/// Remainder only; skips quotient and trace bookkeeping.
pub fn remainder<I: Int>(
    module: &FreeModule<I>,
    f: &ModuleElement<I>,
    divisors: &[ModuleElement<I>],
) -> ModuleElement<I> {
    Divisors::new(module, divisors).divide(f, false).remainder
}

/// `f ->_G 0`, decided by running the division algorithm.
pub fn reduces_to_zero<I: Int>(module: &FreeModule<I>, f: &ModuleElement<I>, divisors: &[ModuleElement<I>]) -> bool {
    remainder(module, f, divisors).is_zero()
}

/// True when the term `t` lies in `<LT(g) : g in gens>`.
pub fn in_leading_module<I: Int>(module: &FreeModule<I>, t: &Term<I>, gens: &[ModuleElement<I>]) -> bool {
    Divisors::new(module, gens).generates(t)
}
