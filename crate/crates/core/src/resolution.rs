//! Free resolutions by iterated syzygies.

use crate::coeff::RingElement;
use crate::error::{AlgebraError, Result};
use crate::groebner::{buchberger, minimize, BuchbergerConfig, GroebnerBasis};
use crate::poly::{FreeModule, ModuleElement, Monomial};
use crate::scalar::Int;
use crate::syzygy::{collapse_same_lm, syzygy_basis};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResolveOptions {
    /// Largest index `k` of a free module `F_k` that will be computed.
    pub max_length: usize,
    /// Merge relations sharing a leading module monomial at every step.
    pub collapse: bool,
    /// Minimize the initial Gröbner basis.
    pub minimize: bool,
    /// Relabel every step so that leading monomials on a common basis
    /// element appear in decreasing pure lex order.
    pub relabel: bool,
    pub buchberger: BuchbergerConfig,
}

impl ResolveOptions {
    pub fn new(max_length: usize) -> Self {
        ResolveOptions {
            max_length,
            collapse: false,
            minimize: true,
            relabel: true,
            buchberger: BuchbergerConfig::default(),
        }
    }

    pub fn collapse(mut self, on: bool) -> Self {
        self.collapse = on;
        self
    }

    pub fn relabel(mut self, on: bool) -> Self {
        self.relabel = on;
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ResolutionStatus {
    /// `0 -> F_length -> ... -> F_0`.
    Finite { length: usize },
    /// Stopped at `F_max_length` with relations still nonzero.
    Truncated { max_length: usize },
    /// `F_start` and `F_{start + period}` carry the same leading data.
    Periodic { start: usize, period: usize },
}

/// `... -> F_2 -> F_1 -> F_0 -> U -> 0`.
///
/// `differentials[0]` lists the images of the basis of `F_0` in the ambient
/// module (a Gröbner basis of `U`); `differentials[k]` for `k >= 1` lists the
/// images of the basis of `F_k` in `F_{k-1}`. `modules[k]` is `F_k` with the
/// Schreyer order induced by `differentials[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Resolution<I> {
    pub ambient: FreeModule<I>,
    pub ranks: Vec<usize>,
    pub modules: Vec<FreeModule<I>>,
    pub differentials: Vec<Vec<ModuleElement<I>>>,
    pub status: ResolutionStatus,
}

impl<I: Int> Resolution<I> {
    /// Index of the last free module.
    pub fn length(&self) -> usize {
        self.ranks.len() - 1
    }

    /// The module each differential lands in.
    fn target(&self, k: usize) -> &FreeModule<I> {
        if k == 0 {
            &self.ambient
        } else {
            &self.modules[k - 1]
        }
    }

    /// `d_{k-1} o d_k = 0` for every adjacent pair, exactly.
    pub fn composition_is_zero(&self) -> bool {
        (1..self.differentials.len()).all(|k| {
            self.differentials[k].iter().all(|r| {
                self.target(k - 1)
                    .substitute(r, &self.differentials[k - 1])
                    .is_ok_and(|v| v.is_zero())
            })
        })
    }
}

type LeadKey<I> = Vec<(RingElement<I>, Monomial)>;

fn lead_key<I: Int>(elems: &[ModuleElement<I>]) -> LeadKey<I> {
    let mut key: LeadKey<I> = elems
        .iter()
        .filter_map(|f| f.leading_term())
        .map(|t| (t.coeff.clone(), t.mono.clone()))
        .collect();
    key.sort();
    key
}

/// Stable reordering by leading basis index, then by leading monomial in
/// decreasing pure lex order. With this labeling the leading monomial
/// `lcm(u, v) / u` of a pair relation avoids the first variable occurring in
/// the leading terms, which bounds the resolution length.
fn relabel<I: Int>(gb: GroebnerBasis<I>) -> Result<GroebnerBasis<I>> {
    let module = gb.module().clone();
    let mut elems = gb.into_elements();
    elems.sort_by(|f, g| {
        let (s, t) = (f.leading_term().expect("nonzero"), g.leading_term().expect("nonzero"));
        s.basis
            .cmp(&t.basis)
            .then_with(|| t.mono.exponents().cmp(s.mono.exponents()))
    });
    GroebnerBasis::certify(&module, elems)
}

/// Resolves the submodule generated by `gens`.
///
/// Step 0 is a Gröbner basis of the input (minimized if requested); step `k`
/// is the syzygy basis of step `k - 1` under its Schreyer order, optionally
/// collapsed. The loop stops when a step has no relations (finite), when two
/// consecutive steps have the same sorted leading coefficient and monomial
/// data with some zero-divisor leading coefficient (periodic), or at
/// `max_length` (truncated). With `relabel` on, every step is reordered
/// before its syzygies are taken.
pub fn resolve<I: Int>(
    module: &FreeModule<I>,
    gens: &[ModuleElement<I>],
    options: &ResolveOptions,
) -> Result<Resolution<I>> {
    if options.max_length == 0 {
        return Err(AlgebraError::Incompatible("max_length must be positive".into()));
    }
    let mut gb = buchberger(module, gens, &options.buchberger)?;
    if options.minimize {
        gb = minimize(&gb)?;
    }
    if options.relabel {
        gb = relabel(gb)?;
    }
    let mut res = Resolution {
        ambient: module.clone(),
        ranks: vec![gb.len()],
        modules: Vec::new(),
        differentials: vec![gb.elements().to_vec()],
        status: ResolutionStatus::Truncated {
            max_length: options.max_length,
        },
    };
    let ring = module.ring();
    let mut current: GroebnerBasis<I> = gb;
    for k in 1..=options.max_length {
        let syz = syzygy_basis(&current)?;
        res.modules.push(syz.basis.module().clone());
        if syz.relations.is_empty() {
            res.status = ResolutionStatus::Finite { length: k - 1 };
            return Ok(res);
        }
        let next = if options.collapse {
            collapse_same_lm(&syz.basis)?
        } else {
            syz.basis
        };
        let next = if options.relabel { relabel(next)? } else { next };
        let prev_key = lead_key(current.elements());
        let key = lead_key(next.elements());
        res.ranks.push(next.len());
        res.differentials.push(next.elements().to_vec());
        let periodic = k >= 2
            && next.len() == current.len()
            && key == prev_key
            && key.iter().any(|(c, _)| ring.is_zero_divisor(c));
        if periodic {
            res.status = ResolutionStatus::Periodic {
                start: k - 1,
                period: 1,
            };
            return Ok(res);
        }
        current = next;
    }
    Ok(res)
}
