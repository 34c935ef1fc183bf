//! Brute-force membership and syzygy sampling by exact linear algebra.
//!
//! Multipliers are polynomials of bounded total degree, so `f = sum p_j f_j`
//! becomes a linear system per coefficient component. Integer components are
//! solved by column Hermite elimination with a unimodular transform; residue
//! components adjoin `N * I` columns and solve over `Z`. None of this goes
//! through the division algorithm or Buchberger's algorithm.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{AlgebraError, Result};
use crate::poly::{FreeModule, ModuleElement, Monomial, PolyTerm, Polynomial};
use crate::scalar::{from_big, to_big, Int};

/// Largest accepted multiplier degree.
pub const MAX_DEGREE: u32 = 8;
/// Largest accepted matrix size (rows times columns, modulus columns included).
pub const MAX_ENTRIES: usize = 400_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct DegreeBound {
    pub max_total_degree: u32,
}

impl DegreeBound {
    pub fn new(max_total_degree: u32) -> Self {
        DegreeBound { max_total_degree }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleVerdict<I> {
    /// `f = sum witness_j gens_j`, checked.
    Member { witness: Vec<Polynomial<I>> },
    /// No multipliers of total degree at most `bound` exist.
    NotMemberUpToBound { bound: DegreeBound },
}

impl<I> OracleVerdict<I> {
    pub fn is_member(&self) -> bool {
        matches!(self, OracleVerdict::Member { .. })
    }
}

/// Monomials of total degree at most `d`, graded then lexicographic.
fn monomials_up_to(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u32>, left: usize, budget: u32, out: &mut Vec<Vec<u32>>) {
        if left == 0 {
            out.push(prefix.clone());
            return;
        }
        for e in (0..=budget).rev() {
            prefix.push(e);
            rec(prefix, left - 1, budget - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for total in 0..=d {
        let mut layer = Vec::new();
        rec(&mut Vec::new(), nvars, total, &mut layer);
        out.extend(layer.into_iter().filter(|e| e.iter().sum::<u32>() == total));
    }
    out.into_iter().map(Monomial::new).collect()
}

/// The linear system of one problem, before splitting into components.
struct System {
    /// `(monomial, basis)` position of every row.
    rows: BTreeMap<(Monomial, usize), usize>,
    /// `(generator, multiplier monomial)` of every column.
    cols: Vec<(usize, Monomial)>,
}

impl System {
    fn new<I: Int>(
        module: &FreeModule<I>,
        gens: &[ModuleElement<I>],
        extra: Option<&ModuleElement<I>>,
        bound: DegreeBound,
    ) -> Result<Self> {
        if bound.max_total_degree > MAX_DEGREE {
            return Err(AlgebraError::OracleRefused(format!(
                "degree bound {} exceeds {MAX_DEGREE}",
                bound.max_total_degree
            )));
        }
        let monos = monomials_up_to(module.nvars(), bound.max_total_degree);
        let mut rows = BTreeMap::new();
        let mut cols = Vec::new();
        for (j, g) in gens.iter().enumerate() {
            for w in &monos {
                cols.push((j, w.clone()));
                for t in g.terms() {
                    let len = rows.len();
                    rows.entry((w.mul(&t.mono), t.basis)).or_insert(len);
                }
            }
        }
        if let Some(f) = extra {
            for t in f.terms() {
                let len = rows.len();
                rows.entry((t.mono.clone(), t.basis)).or_insert(len);
            }
        }
        let size = rows.len() * (cols.len() + rows.len());
        if size > MAX_ENTRIES {
            return Err(AlgebraError::OracleRefused(format!(
                "system of {size} entries exceeds {MAX_ENTRIES}"
            )));
        }
        Ok(System { rows, cols })
    }

    /// Coefficient matrix (row-major) of component `i`, with `N * I` columns
    /// appended for a residue component.
    fn matrix<I: Int>(&self, module: &FreeModule<I>, gens: &[ModuleElement<I>], i: usize) -> Vec<Vec<BigInt>> {
        let n = to_big(&module.ring().moduli()[i]);
        let width = self.cols.len() + if n.is_zero() { 0 } else { self.rows.len() };
        let mut a = vec![vec![BigInt::zero(); width]; self.rows.len()];
        for (c, (j, w)) in self.cols.iter().enumerate() {
            for t in gens[*j].terms() {
                let r = self.rows[&(w.mul(&t.mono), t.basis)];
                a[r][c] = to_big(&t.coeff.components()[i]);
            }
        }
        if !n.is_zero() {
            for r in 0..self.rows.len() {
                a[r][self.cols.len() + r] = n.clone();
            }
        }
        a
    }

    fn rhs<I: Int>(&self, f: &ModuleElement<I>, i: usize) -> Vec<BigInt> {
        let mut b = vec![BigInt::zero(); self.rows.len()];
        for t in f.terms() {
            b[self.rows[&(t.mono.clone(), t.basis)]] = to_big(&t.coeff.components()[i]);
        }
        b
    }
}

/// `A U = H` with `U` unimodular and `H` in column echelon form: the first
/// `rank` columns carry pivots in increasing rows, the rest are zero.
struct Echelon {
    h: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    pivots: Vec<usize>,
}

impl Echelon {
    fn new(mut h: Vec<Vec<BigInt>>, width: usize) -> Self {
        let mut u: Vec<Vec<BigInt>> = (0..width)
            .map(|r| {
                (0..width)
                    .map(|c| if r == c { BigInt::one() } else { BigInt::zero() })
                    .collect()
            })
            .collect();
        let mut pivots = Vec::new();
        for row in 0..h.len() {
            let p = pivots.len();
            if p == width {
                break;
            }
            for j in p + 1..width {
                if h[row][j].is_zero() {
                    continue;
                }
                let (a, b) = (h[row][p].clone(), h[row][j].clone());
                let e = a.extended_gcd(&b);
                let (ca, cb) = (&a / &e.gcd, &b / &e.gcd);
                let mix = |m: &mut Vec<Vec<BigInt>>| {
                    for r in m.iter_mut() {
                        let (xp, xj) = (r[p].clone(), r[j].clone());
                        r[p] = &e.x * &xp + &e.y * &xj;
                        r[j] = &ca * &xj - &cb * &xp;
                    }
                };
                mix(&mut h);
                mix(&mut u);
            }
            if !h[row][p].is_zero() {
                if h[row][p].is_negative() {
                    for m in [&mut h, &mut u] {
                        for r in m.iter_mut() {
                            r[p] = -r[p].clone();
                        }
                    }
                }
                pivots.push(row);
            }
        }
        Echelon { h, u, pivots }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// An integer solution of `A x = b`, if one exists.
    fn solve(&self, b: &[BigInt]) -> Option<Vec<BigInt>> {
        let mut y: Vec<BigInt> = Vec::with_capacity(self.rank());
        for (row, rhs) in b.iter().enumerate() {
            let mut residual = rhs.clone();
            for (k, yk) in y.iter().enumerate() {
                residual -= &self.h[row][k] * yk;
            }
            if self.pivots.get(y.len()) == Some(&row) {
                let (q, r) = residual.div_rem(&self.h[row][y.len()]);
                if !r.is_zero() {
                    return None;
                }
                y.push(q);
            } else if !residual.is_zero() {
                return None;
            }
        }
        let width = self.u.len();
        Some(
            (0..width)
                .map(|r| y.iter().enumerate().map(|(k, yk)| &self.u[r][k] * yk).sum())
                .collect(),
        )
    }

    /// Integer basis of the kernel of `A`.
    fn kernel(&self) -> Vec<Vec<BigInt>> {
        (self.rank()..self.u.len())
            .map(|c| self.u.iter().map(|r| r[c].clone()).collect())
            .collect()
    }
}

fn reduce_component(x: &BigInt, n: &BigInt) -> BigInt {
    if n.is_zero() {
        x.clone()
    } else {
        x.mod_floor(n)
    }
}

/// Assembles per-component column values into one polynomial per generator.
fn assemble<I: Int>(
    module: &FreeModule<I>,
    sys: &System,
    ngens: usize,
    comps: &[Vec<BigInt>],
) -> Result<Vec<Polynomial<I>>> {
    let ring = module.ring();
    let mut terms: Vec<Vec<PolyTerm<I>>> = vec![Vec::new(); ngens];
    for (c, (j, w)) in sys.cols.iter().enumerate() {
        let raw = comps
            .iter()
            .map(|v| {
                from_big::<I>(&v[c])
                    .ok_or_else(|| AlgebraError::OracleRefused("witness coefficient out of range".into()))
            })
            .collect::<Result<Vec<I>>>()?;
        let coeff = ring.normalize(raw)?;
        if !coeff.is_zero() {
            terms[*j].push(PolyTerm { coeff, mono: w.clone() });
        }
    }
    Ok(terms.into_iter().map(|t| module.polynomial(t)).collect())
}

/// Decides whether `f = sum p_j gens_j` with `deg p_j <= bound`.
///
/// A `Member` witness is recombined and checked before it is returned.
pub fn member_bruteforce<I: Int>(
    module: &FreeModule<I>,
    f: &ModuleElement<I>,
    gens: &[ModuleElement<I>],
    bound: DegreeBound,
) -> Result<OracleVerdict<I>> {
    module.validate(f)?;
    for g in gens {
        module.validate(g)?;
    }
    let sys = System::new(module, gens, Some(f), bound)?;
    let mut comps = Vec::with_capacity(module.ring().len());
    for i in 0..module.ring().len() {
        let n = to_big(&module.ring().moduli()[i]);
        let a = sys.matrix(module, gens, i);
        let width = a.first().map_or(sys.cols.len(), Vec::len);
        let ech = Echelon::new(a, width);
        let Some(x) = ech.solve(&sys.rhs(f, i)) else {
            return Ok(OracleVerdict::NotMemberUpToBound { bound });
        };
        comps.push(x[..sys.cols.len()].iter().map(|v| reduce_component(v, &n)).collect());
    }
    let witness = assemble(module, &sys, gens.len(), &comps)?;
    if &module.combine(&witness, gens)? != f {
        return Err(AlgebraError::Consistency("oracle witness does not recombine".into()));
    }
    Ok(OracleVerdict::Member { witness })
}

/// A random `(p_1, ..., p_m)` with `sum p_j gens_j = 0` and `deg p_j <= bound`.
///
/// Integer combinations of a kernel basis with small random coefficients,
/// reproducible from `seed`. May be zero.
pub fn random_syzygy<I: Int>(
    module: &FreeModule<I>,
    gens: &[ModuleElement<I>],
    bound: DegreeBound,
    seed: u64,
) -> Result<Vec<Polynomial<I>>> {
    for g in gens {
        module.validate(g)?;
    }
    let sys = System::new(module, gens, None, bound)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut comps = Vec::with_capacity(module.ring().len());
    for i in 0..module.ring().len() {
        let n = to_big(&module.ring().moduli()[i]);
        let a = sys.matrix(module, gens, i);
        let width = a.first().map_or(sys.cols.len(), Vec::len);
        let ech = Echelon::new(a, width);
        let mut acc = vec![BigInt::zero(); width];
        for v in ech.kernel() {
            let k = BigInt::from(rng.gen_range(-3i64..=3));
            for (s, x) in acc.iter_mut().zip(&v) {
                *s += &k * x;
            }
        }
        comps.push(acc[..sys.cols.len()].iter().map(|v| reduce_component(v, &n)).collect());
    }
    let coords = assemble(module, &sys, gens.len(), &comps)?;
    if !module.combine(&coords, gens)?.is_zero() {
        return Err(AlgebraError::Consistency("sampled syzygy does not vanish".into()));
    }
    Ok(coords)
}
