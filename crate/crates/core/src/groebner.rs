//! S_R-elements, annihilator elements, Buchberger's criterion and algorithm,
//! and basis minimization.

use std::collections::VecDeque;

use crate::coeff::{RingElement, RingSpec};
use crate::division::{in_leading_module, Divisors, TraceStep};
use crate::error::{AlgebraError, Result};
use crate::poly::{FreeModule, ModuleElement, Monomial, PolyTerm, Polynomial};
use crate::scalar::Int;

/// `(l, r)` with `l * a = r * b` an associate of `lcm(a, b)`, zero in every
/// component where `a` or `b` vanishes.
pub fn sr_coefficients<I: Int>(
    ring: &RingSpec<I>,
    a: &RingElement<I>,
    b: &RingElement<I>,
) -> (RingElement<I>, RingElement<I>) {
    ring.sr_coefficients(a, b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CriticalKind {
    /// `S_R(f_a, f_b)` with `a < b`.
    Pair(usize, usize),
    /// `ann(lc(f_a)) f_a`.
    Annihilator(usize),
}

/// `value = u_left f_a - u_right f_b`, or `u_left f_a` for annihilators
/// (where `u_right` is zero).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriticalElement<I> {
    pub kind: CriticalKind,
    pub value: ModuleElement<I>,
    pub u_left: PolyTerm<I>,
    pub u_right: PolyTerm<I>,
}

fn pair_parts<I: Int>(
    module: &FreeModule<I>,
    f: &ModuleElement<I>,
    g: &ModuleElement<I>,
) -> Option<(PolyTerm<I>, PolyTerm<I>, ModuleElement<I>)> {
    let (lf, lg) = (f.leading_term()?, g.leading_term()?);
    if lf.basis != lg.basis {
        return None;
    }
    let l = lf.mono.lcm(&lg.mono);
    let (a, b) = module.ring().sr_coefficients(&lf.coeff, &lg.coeff);
    let ul = PolyTerm {
        coeff: a,
        mono: l.div_unchecked(&lf.mono),
    };
    let ur = PolyTerm {
        coeff: b,
        mono: l.div_unchecked(&lg.mono),
    };
    let value = module.sub_unchecked(
        &module.term_mul_unchecked(&ul.coeff, &ul.mono, f),
        &module.term_mul_unchecked(&ur.coeff, &ur.mono, g),
    );
    Some((ul, ur, value))
}

/// `S_R(f, g)`, or `None` when the leading terms sit on different basis
/// elements (or either input is zero).
pub fn s_r_element<I: Int>(
    module: &FreeModule<I>,
    f: &ModuleElement<I>,
    g: &ModuleElement<I>,
) -> Option<ModuleElement<I>> {
    pair_parts(module, f, g).map(|(_, _, v)| v)
}

/// `ann(lc(f)) f`; zero for `f = 0`.
pub fn ann_element<I: Int>(module: &FreeModule<I>, f: &ModuleElement<I>) -> ModuleElement<I> {
    match f.leading_term() {
        Some(lt) => module.scalar_mul_unchecked(&module.ring().annihilator(&lt.coeff), f),
        None => ModuleElement::zero(),
    }
}

/// The critical element of `gens` named by `kind`; `None` for undefined pairs.
pub fn critical_element<I: Int>(
    module: &FreeModule<I>,
    gens: &[ModuleElement<I>],
    kind: CriticalKind,
) -> Option<CriticalElement<I>> {
    match kind {
        CriticalKind::Pair(a, b) => {
            pair_parts(module, &gens[a], &gens[b]).map(|(u_left, u_right, value)| CriticalElement {
                kind,
                value,
                u_left,
                u_right,
            })
        }
        CriticalKind::Annihilator(a) => {
            let lt = gens[a].leading_term()?;
            let ann = module.ring().annihilator(&lt.coeff);
            Some(CriticalElement {
                kind,
                value: module.scalar_mul_unchecked(&ann, &gens[a]),
                u_left: PolyTerm {
                    coeff: ann,
                    mono: Monomial::one(module.nvars()),
                },
                u_right: PolyTerm {
                    coeff: module.ring().zero(),
                    mono: Monomial::one(module.nvars()),
                },
            })
        }
    }
}

/// All defined critical elements: for each `a`, the pairs `(a, b)` with
/// `b > a`, then the annihilator of `a`. Zero generators are skipped.
pub fn critical_elements<I: Int>(module: &FreeModule<I>, gens: &[ModuleElement<I>]) -> Vec<CriticalElement<I>> {
    let mut out = Vec::new();
    for a in 0..gens.len() {
        if gens[a].is_zero() {
            continue;
        }
        for b in a + 1..gens.len() {
            out.extend(critical_element(module, gens, CriticalKind::Pair(a, b)));
        }
        out.extend(critical_element(module, gens, CriticalKind::Annihilator(a)));
    }
    out
}

/// A critical element whose remainder is nonzero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness<I> {
    pub kind: CriticalKind,
    pub remainder: ModuleElement<I>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CriterionReport<I> {
    /// Number of defined critical elements examined.
    pub checked: usize,
    pub witnesses: Vec<Witness<I>>,
}

impl<I> CriterionReport<I> {
    pub fn passed(&self) -> bool {
        self.witnesses.is_empty()
    }
}

/// Buchberger's criterion: every defined `S_R(f_a, f_b)` and every
/// `ann(lc(f_a)) f_a` must reduce to zero modulo `candidate`.
pub fn criterion_check<I: Int>(module: &FreeModule<I>, candidate: &[ModuleElement<I>]) -> CriterionReport<I> {
    let div = Divisors::new(module, candidate);
    let crit = critical_elements(module, candidate);
    let checked = crit.len();
    let witnesses = crit
        .into_iter()
        .filter_map(|c| {
            let remainder = div.divide(&c.value, false).remainder;
            (!remainder.is_zero()).then_some(Witness {
                kind: c.kind,
                remainder,
            })
        })
        .collect();
    CriterionReport { checked, witnesses }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuchbergerConfig {
    /// Ceiling on the number of critical elements processed.
    pub max_steps: usize,
    /// Keep coordinates of every basis element in terms of the inputs.
    pub track_provenance: bool,
    /// Keep one event per critical element, with division traces.
    pub record_log: bool,
}

impl Default for BuchbergerConfig {
    fn default() -> Self {
        BuchbergerConfig {
            max_steps: 200_000,
            track_provenance: false,
            record_log: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EventOutcome {
    /// Leading terms on different basis elements.
    Undefined,
    /// The critical element itself is zero.
    Vanished,
    ReducedToZero,
    /// The nonzero remainder was appended at this index.
    Appended(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuchbergerEvent {
    pub kind: CriticalKind,
    pub outcome: EventOutcome,
    pub trace: Vec<TraceStep>,
}

/// A generating set together with its certification status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis<I> {
    module: FreeModule<I>,
    elements: Vec<ModuleElement<I>>,
    certified: bool,
    provenance: Option<Vec<Vec<Polynomial<I>>>>,
    log: Vec<BuchbergerEvent>,
}

impl<I: Int> GroebnerBasis<I> {
    /// Runs [`criterion_check`] on `elements` as given.
    pub fn certify(module: &FreeModule<I>, elements: Vec<ModuleElement<I>>) -> Result<Self> {
        for f in &elements {
            module.validate(f)?;
        }
        let certified = criterion_check(module, &elements).passed();
        Ok(GroebnerBasis {
            module: module.clone(),
            elements,
            certified,
            provenance: None,
            log: Vec::new(),
        })
    }

    pub fn module(&self) -> &FreeModule<I> {
        &self.module
    }

    pub fn elements(&self) -> &[ModuleElement<I>] {
        &self.elements
    }

    pub fn into_elements(self) -> Vec<ModuleElement<I>> {
        self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_certified(&self) -> bool {
        self.certified
    }

    /// `provenance()[k][i]` is the coefficient of input `i` in element `k`.
    pub fn provenance(&self) -> Option<&[Vec<Polynomial<I>>]> {
        self.provenance.as_deref()
    }

    pub fn log(&self) -> &[BuchbergerEvent] {
        &self.log
    }

    pub fn reduce(&self, f: &ModuleElement<I>) -> crate::division::DivisionResult<I> {
        crate::division::divide(&self.module, f, &self.elements)
    }

    /// Membership in the generated submodule. Exact only when certified.
    pub fn contains(&self, f: &ModuleElement<I>) -> bool {
        crate::division::reduces_to_zero(&self.module, f, &self.elements)
    }
}

fn poly_product<I: Int>(module: &FreeModule<I>, p: &Polynomial<I>, q: &Polynomial<I>) -> Polynomial<I> {
    p.terms().iter().fold(Polynomial::zero(), |acc, t| {
        module.poly_add(&acc, &module.poly_scale(&t.coeff, &t.mono, q))
    })
}

struct Engine<'a, I> {
    module: &'a FreeModule<I>,
    config: &'a BuchbergerConfig,
    h: Vec<ModuleElement<I>>,
    prov: Vec<Vec<Polynomial<I>>>,
    ann_done: Vec<bool>,
    queue: VecDeque<(usize, usize)>,
    steps: usize,
    log: Vec<BuchbergerEvent>,
}

impl<I: Int> Engine<'_, I> {
    fn push(&mut self, f: ModuleElement<I>, coords: Vec<Polynomial<I>>) -> usize {
        let k = self.h.len();
        self.h.push(f);
        if self.config.track_provenance {
            self.prov.push(coords);
        }
        self.ann_done.push(false);
        self.queue.extend((0..k).map(|j| (j, k)));
        k
    }

    fn process(&mut self, kind: CriticalKind) -> Result<()> {
        self.steps += 1;
        if self.steps > self.config.max_steps {
            return Err(AlgebraError::IterationLimit {
                limit: self.config.max_steps,
                basis_len: self.h.len(),
            });
        }
        if let CriticalKind::Annihilator(a) = kind {
            self.ann_done[a] = true;
        }
        let module = self.module;
        let Some(crit) = critical_element(module, &self.h, kind) else {
            self.event(kind, EventOutcome::Undefined, Vec::new());
            return Ok(());
        };
        if crit.value.is_zero() {
            self.event(kind, EventOutcome::Vanished, Vec::new());
            return Ok(());
        }
        let record = self.config.track_provenance || self.config.record_log;
        let d = Divisors::new(module, &self.h).divide(&crit.value, record);
        if d.remainder.is_zero() {
            self.event(kind, EventOutcome::ReducedToZero, d.trace);
            return Ok(());
        }
        let coords = if self.config.track_provenance {
            let (a, b) = match kind {
                CriticalKind::Pair(a, b) => (a, Some(b)),
                CriticalKind::Annihilator(a) => (a, None),
            };
            let mut c: Vec<Polynomial<I>> = self.prov[a]
                .iter()
                .map(|p| module.poly_scale(&crit.u_left.coeff, &crit.u_left.mono, p))
                .collect();
            if let Some(b) = b {
                for (ci, p) in c.iter_mut().zip(&self.prov[b]) {
                    let s = module.poly_scale(&crit.u_right.coeff, &crit.u_right.mono, p);
                    *ci = module.poly_add(ci, &module.poly_neg(&s));
                }
            }
            for (q, pj) in d.quotients.iter().zip(&self.prov) {
                if q.is_zero() {
                    continue;
                }
                for (ci, p) in c.iter_mut().zip(pj) {
                    *ci = module.poly_add(ci, &module.poly_neg(&poly_product(module, q, p)));
                }
            }
            c
        } else {
            Vec::new()
        };
        let k = self.push(d.remainder, coords);
        self.event(kind, EventOutcome::Appended(k), d.trace);
        Ok(())
    }

    fn event(&mut self, kind: CriticalKind, outcome: EventOutcome, trace: Vec<TraceStep>) {
        if self.config.record_log {
            self.log.push(BuchbergerEvent { kind, outcome, trace });
        }
    }
}

/// Buchberger's algorithm.
///
/// Zero inputs are dropped; the remaining inputs keep their relative order
/// at the front of the result. Pairs are processed FIFO, starting from all
/// `(a, b)` with `a < b` in lexicographic order; after each pair `(p, q)`
/// the annihilators of `p` and `q` are processed if they have not been yet,
/// and every appended element `k` enqueues `(j, k)` for `j < k`. A final
/// pass scales each element so that its leading coefficient has unit part 1.
pub fn buchberger<I: Int>(
    module: &FreeModule<I>,
    gens: &[ModuleElement<I>],
    config: &BuchbergerConfig,
) -> Result<GroebnerBasis<I>> {
    let mut engine = Engine {
        module,
        config,
        h: Vec::new(),
        prov: Vec::new(),
        ann_done: Vec::new(),
        queue: VecDeque::new(),
        steps: 0,
        log: Vec::new(),
    };
    for (i, g) in gens.iter().enumerate() {
        module.validate(g)?;
        if g.is_zero() {
            continue;
        }
        let mut coords = vec![Polynomial::zero(); gens.len()];
        coords[i] = module.polynomial(vec![PolyTerm {
            coeff: module.ring().one(),
            mono: Monomial::one(module.nvars()),
        }]);
        engine.h.push(g.clone());
        if config.track_provenance {
            engine.prov.push(coords);
        }
        engine.ann_done.push(false);
    }
    if engine.h.is_empty() {
        return Err(AlgebraError::NoGenerators);
    }
    let m = engine.h.len();
    for a in 0..m {
        for b in a + 1..m {
            engine.queue.push_back((a, b));
        }
    }
    loop {
        if let Some((p, q)) = engine.queue.pop_front() {
            engine.process(CriticalKind::Pair(p, q))?;
            for a in [p, q] {
                if !engine.ann_done[a] {
                    engine.process(CriticalKind::Annihilator(a))?;
                }
            }
        } else if let Some(a) = engine.ann_done.iter().position(|d| !d) {
            engine.process(CriticalKind::Annihilator(a))?;
        } else {
            break;
        }
    }
    let ring = module.ring();
    let mut elements = engine.h;
    let mut prov = engine.prov;
    for (k, f) in elements.iter_mut().enumerate() {
        let lc = &f.leading_term().expect("appended elements are nonzero").coeff;
        let inv = ring
            .inverse(&ring.unit_divisor_form(lc).unit)
            .expect("unit part is invertible");
        if inv == ring.one() {
            continue;
        }
        *f = module.scalar_mul_unchecked(&inv, f);
        if let Some(row) = prov.get_mut(k) {
            for p in row.iter_mut() {
                *p = module.poly_scale(&inv, &Monomial::one(module.nvars()), p);
            }
        }
    }
    Ok(GroebnerBasis {
        module: module.clone(),
        elements,
        certified: true,
        provenance: config.track_provenance.then_some(prov),
        log: engine.log,
    })
}

/// [`buchberger`] with the default configuration.
pub fn groebner_basis<I: Int>(module: &FreeModule<I>, gens: &[ModuleElement<I>]) -> Result<GroebnerBasis<I>> {
    buchberger(module, gens, &BuchbergerConfig::default())
}

/// True when every leading term of `elems` lies in `<LT(g) : g in gens>`.
pub fn leading_module_contains<I: Int>(
    module: &FreeModule<I>,
    gens: &[ModuleElement<I>],
    elems: &[ModuleElement<I>],
) -> bool {
    elems
        .iter()
        .filter_map(|f| f.leading_term())
        .all(|t| in_leading_module(module, t, gens))
}

/// Equality of the leading-term modules of two generating sets.
pub fn same_leading_module<I: Int>(module: &FreeModule<I>, a: &[ModuleElement<I>], b: &[ModuleElement<I>]) -> bool {
    leading_module_contains(module, a, b) && leading_module_contains(module, b, a)
}

/// Drops elements whose leading term is generated by the leading terms of
/// the remaining elements, scanning from the last element to the first so
/// that of two associates the earlier one survives.
///
/// The result is re-certified, and every dropped element is checked to
/// reduce to zero modulo it.
pub fn minimize<I: Int>(basis: &GroebnerBasis<I>) -> Result<GroebnerBasis<I>> {
    if !basis.certified {
        return Err(AlgebraError::Uncertified);
    }
    let module = &basis.module;
    let mut keep = vec![true; basis.elements.len()];
    for i in (0..basis.elements.len()).rev() {
        let Some(lt) = basis.elements[i].leading_term() else {
            keep[i] = false;
            continue;
        };
        let others: Vec<ModuleElement<I>> = basis
            .elements
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i && keep[j])
            .map(|(_, f)| f.clone())
            .collect();
        if in_leading_module(module, lt, &others) {
            keep[i] = false;
        }
    }
    let pick = |v: &[ModuleElement<I>]| -> Vec<ModuleElement<I>> {
        v.iter()
            .zip(&keep)
            .filter(|(_, k)| **k)
            .map(|(f, _)| f.clone())
            .collect()
    };
    let elements = pick(&basis.elements);
    if !criterion_check(module, &elements).passed() {
        return Err(AlgebraError::Consistency("minimized basis fails the criterion".into()));
    }
    let div = Divisors::new(module, &elements);
    for (f, _) in basis.elements.iter().zip(&keep).filter(|(_, k)| !**k) {
        if !div.divide(f, false).remainder.is_zero() {
            return Err(AlgebraError::Consistency(
                "dropped element does not reduce to zero".into(),
            ));
        }
    }
    let provenance = basis.provenance.as_ref().map(|rows| {
        rows.iter()
            .zip(&keep)
            .filter(|(_, k)| **k)
            .map(|(r, _)| r.clone())
            .collect()
    });
    Ok(GroebnerBasis {
        module: module.clone(),
        elements,
        certified: true,
        provenance,
        log: basis.log.clone(),
    })
}
