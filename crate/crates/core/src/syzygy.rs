//! Syzygy relations of a Gröbner basis and their Schreyer-order bases.

use crate::division::{divide, Divisors};
use crate::error::{AlgebraError, Result};
use crate::groebner::{criterion_check, critical_element, CriticalKind, GroebnerBasis};
use crate::order::ModuleOrder;
use crate::poly::{FreeModule, ModuleElement, Monomial, Polynomial, Term};
use crate::scalar::Int;

/// Basis symbol of relation modules.
pub const RELATION_SYMBOL: &str = "g";

/// A relation `sum h_l g_l` with `sum h_l f_l = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyRelation<I> {
    pub kind: CriticalKind,
    pub element: ModuleElement<I>,
    /// Quotients of the critical element on division by the basis.
    pub quotients: Vec<Polynomial<I>>,
}

/// Relations together with the basis they form over the relation module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Syzygies<I> {
    pub relations: Vec<SyzygyRelation<I>>,
    pub basis: GroebnerBasis<I>,
}

/// The free module `L = S^m` on `g_1, ..., g_m`, ordered by the Schreyer
/// order induced by `elements`.
pub fn relation_module<I: Int>(module: &FreeModule<I>, elements: &[ModuleElement<I>]) -> Result<FreeModule<I>> {
    if elements.is_empty() {
        return Err(AlgebraError::NoGenerators);
    }
    let leads = elements
        .iter()
        .map(|f| {
            f.leading_term()
                .map(|t| (t.mono.clone(), t.basis))
                .ok_or(AlgebraError::Incompatible("zero element in a Schreyer frame".into()))
        })
        .collect::<Result<Vec<_>>>()?;
    module.sibling(
        elements.len(),
        ModuleOrder::schreyer(leads, module.order().clone()),
        RELATION_SYMBOL,
    )
}

/// Generators of `syz(f_1, ..., f_m)` read off a certified basis.
///
/// For each `a`: every defined pair `(a, b)` with `b > a` gives
/// `r_ab = u_ab g_a - u_ba g_b - sum q_l g_l`, then `r_aa = ann(lc f_a) g_a -
/// sum q_l g_l` when that annihilator is nonzero. Zero relations are omitted.
/// The result is checked to be a Gröbner basis under the Schreyer order.
pub fn syzygy_basis<I: Int>(basis: &GroebnerBasis<I>) -> Result<Syzygies<I>> {
    if !basis.is_certified() {
        return Err(AlgebraError::Uncertified);
    }
    let module = basis.module();
    let gens = basis.elements();
    let l = relation_module(module, gens)?;
    let ring = module.ring();
    let mut relations = Vec::new();
    for a in 0..gens.len() {
        let kinds = (a + 1..gens.len())
            .map(|b| CriticalKind::Pair(a, b))
            .chain(std::iter::once(CriticalKind::Annihilator(a)));
        for kind in kinds {
            let Some(crit) = critical_element(module, gens, kind) else {
                continue;
            };
            if crit.u_left.coeff.is_zero() {
                continue;
            }
            let d = divide(module, &crit.value, gens);
            if !d.remainder.is_zero() {
                return Err(AlgebraError::Consistency(format!("{kind:?} does not reduce to zero")));
            }
            let mut terms = vec![Term::new(crit.u_left.coeff.clone(), crit.u_left.mono.clone(), a)];
            if let CriticalKind::Pair(_, b) = kind {
                terms.push(Term::new(ring.neg(&crit.u_right.coeff), crit.u_right.mono.clone(), b));
            }
            for (j, q) in d.quotients.iter().enumerate() {
                terms.extend(
                    q.terms()
                        .iter()
                        .map(|t| Term::new(ring.neg(&t.coeff), t.mono.clone(), j)),
                );
            }
            let element = l.element(terms)?;
            if element.is_zero() {
                continue;
            }
            debug_assert!(module.substitute(&element, gens).is_ok_and(|v| v.is_zero()));
            relations.push(SyzygyRelation {
                kind,
                element,
                quotients: d.quotients,
            });
        }
    }
    let elements: Vec<ModuleElement<I>> = relations.iter().map(|r| r.element.clone()).collect();
    let basis = GroebnerBasis::certify(&l, elements)?;
    if !basis.is_certified() {
        return Err(AlgebraError::Consistency(
            "relations are not a Schreyer Gröbner basis".into(),
        ));
    }
    Ok(Syzygies { relations, basis })
}

/// Replaces every group of relations that share a leading module monomial by
/// one Bezout combination whose leading coefficient is the gcd of theirs.
///
/// Groups keep the position of their first member. The output is checked
/// against the criterion and by mutual reduction with the input.
pub fn collapse_same_lm<I: Int>(basis: &GroebnerBasis<I>) -> Result<GroebnerBasis<I>> {
    if !basis.is_certified() {
        return Err(AlgebraError::Uncertified);
    }
    let module = basis.module();
    let ring = module.ring();
    let mut groups: Vec<((Monomial, usize), Vec<usize>)> = Vec::new();
    for (i, f) in basis.elements().iter().enumerate() {
        let Some(lt) = f.leading_term() else { continue };
        let key = (lt.mono.clone(), lt.basis);
        match groups.iter_mut().find(|(k, _)| *k == key) {
            Some((_, members)) => members.push(i),
            None => groups.push((key, vec![i])),
        }
    }
    let one = Monomial::one(module.nvars());
    let mut out = Vec::with_capacity(groups.len());
    for (_, members) in &groups {
        if let [only] = members[..] {
            out.push(basis.elements()[only].clone());
            continue;
        }
        let lcs: Vec<_> = members
            .iter()
            .map(|&i| &basis.elements()[i].leading_term().expect("nonzero").coeff)
            .collect();
        let (_, mults) = ring.bezout_combine(&lcs);
        let mut acc = ModuleElement::zero();
        for (&i, m) in members.iter().zip(&mults) {
            acc = module.add_unchecked(&acc, &module.term_mul_unchecked(m, &one, &basis.elements()[i]));
        }
        out.push(acc);
    }
    if !criterion_check(module, &out).passed() {
        return Err(AlgebraError::Consistency(
            "collapsed relations fail the criterion".into(),
        ));
    }
    let there = Divisors::new(module, &out);
    let back = Divisors::new(module, basis.elements());
    let same = basis
        .elements()
        .iter()
        .all(|f| there.divide(f, false).remainder.is_zero())
        && out.iter().all(|f| back.divide(f, false).remainder.is_zero());
    if !same {
        return Err(AlgebraError::Consistency(
            "collapsed relations generate a different module".into(),
        ));
    }
    GroebnerBasis::certify(module, out)
}
