//! Coefficient rings `R = Z/N_1 x ... x Z/N_p`, where a modulus of 0 stands
//! for the integers themselves.
//!
//! Every element is stored componentwise in canonical form: residues lie in
//! `[0, N)`, integer components are unrestricted. Divisibility questions are
//! answered through the unit-divisor form `a = u * d`, where `d = gcd(a, N)`
//! (or `|a|` over the integers) and `u` is the smallest positive unit lifting
//! `a / d`. This sidesteps factoring `N` while still giving canonical gcds,
//! lcms and annihilators.

use std::fmt;

use crate::error::{AlgebraError, Result};
use crate::scalar::{ext_gcd, ext_gcd_fold, Int};

/// Moduli of the coefficient ring, one per component.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingSpec<I> {
    moduli: Vec<I>,
}

/// Element of a [`RingSpec`], canonical in every component.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement<I> {
    comps: Vec<I>,
}

/// `a = unit * divisor`, componentwise.
///
/// Divisor components are kept unreduced: over `Z/N` each one is a positive
/// divisor of `N` (so zero has divisor `N`), over the integers it is `|a|`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitDivisorForm<I> {
    pub unit: RingElement<I>,
    pub divisor: Vec<I>,
}

impl<I: Int> RingElement<I> {
    pub fn components(&self) -> &[I] {
        &self.comps
    }

    pub fn len(&self) -> usize {
        self.comps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.comps.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(|c| c.is_zero())
    }

    pub fn into_components(self) -> Vec<I> {
        self.comps
    }
}

impl<I: Int> fmt::Display for RingElement<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.comps.len() == 1 {
            return write!(f, "{}", self.comps[0]);
        }
        write!(f, "(")?;
        for (i, c) in self.comps.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl<I: Int> fmt::Display for RingSpec<I> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, n) in self.moduli.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            if n.is_zero() {
                write!(f, "ZZ")?;
            } else {
                write!(f, "ZZ/{n}")?;
            }
        }
        Ok(())
    }
}

impl<I: Int> RingSpec<I> {
    pub fn new(moduli: Vec<I>) -> Result<Self> {
        if moduli.is_empty() {
            return Err(AlgebraError::EmptyRing);
        }
        for n in &moduli {
            if n.is_negative() || n.is_one() {
                return Err(AlgebraError::InvalidModulus(n.to_string()));
            }
        }
        Ok(RingSpec { moduli })
    }

    /// Convenience constructor from small moduli.
    pub fn from_moduli(moduli: &[u64]) -> Result<Self> {
        let moduli = moduli
            .iter()
            .map(|&m| I::from_u64(m).ok_or_else(|| AlgebraError::InvalidModulus(m.to_string())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(moduli)
    }

    pub fn moduli(&self) -> &[I] {
        &self.moduli
    }

    /// Number of components.
    pub fn len(&self) -> usize {
        self.moduli.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moduli.is_empty()
    }

    /// True when every component is a finite residue ring.
    pub fn is_finite(&self) -> bool {
        self.moduli.iter().all(|n| !n.is_zero())
    }

    fn reduce(&self, i: usize, v: I) -> I {
        let n = &self.moduli[i];
        if n.is_zero() {
            v
        } else {
            v.mod_floor(n)
        }
    }

    fn map1(&self, a: &RingElement<I>, mut op: impl FnMut(usize, &I, &I) -> I) -> RingElement<I> {
        debug_assert_eq!(a.comps.len(), self.moduli.len());
        RingElement {
            comps: a
                .comps
                .iter()
                .zip(&self.moduli)
                .enumerate()
                .map(|(i, (x, n))| op(i, x, n))
                .collect(),
        }
    }

    fn map2(
        &self,
        a: &RingElement<I>,
        b: &RingElement<I>,
        mut op: impl FnMut(usize, &I, &I, &I) -> I,
    ) -> RingElement<I> {
        debug_assert_eq!(a.comps.len(), self.moduli.len());
        debug_assert_eq!(b.comps.len(), self.moduli.len());
        RingElement {
            comps: (0..self.moduli.len())
                .map(|i| op(i, &a.comps[i], &b.comps[i], &self.moduli[i]))
                .collect(),
        }
    }

    /// Reduces raw integers into canonical form.
    pub fn normalize(&self, raw: Vec<I>) -> Result<RingElement<I>> {
        if raw.len() != self.moduli.len() {
            return Err(AlgebraError::ArityMismatch {
                expected: self.moduli.len(),
                found: raw.len(),
            });
        }
        Ok(RingElement {
            comps: raw.into_iter().enumerate().map(|(i, v)| self.reduce(i, v)).collect(),
        })
    }

    /// Builds an element from small integers.
    pub fn element(&self, raw: &[i64]) -> Result<RingElement<I>> {
        self.normalize(raw.iter().map(|&v| I::from_i64_exact(v)).collect())
    }

    /// The image of an integer under the diagonal map `Z -> R`.
    pub fn from_int(&self, v: I) -> RingElement<I> {
        RingElement {
            comps: (0..self.len()).map(|i| self.reduce(i, v.clone())).collect(),
        }
    }

    /// Checks that `a` has the right arity and canonical components.
    pub fn validate(&self, a: &RingElement<I>) -> Result<()> {
        if a.comps.len() != self.moduli.len() {
            return Err(AlgebraError::ArityMismatch {
                expected: self.moduli.len(),
                found: a.comps.len(),
            });
        }
        for (c, n) in a.comps.iter().zip(&self.moduli) {
            if !n.is_zero() && (c.is_negative() || c >= n) {
                return Err(AlgebraError::Incompatible(format!(
                    "component {c} is not reduced modulo {n}"
                )));
            }
        }
        Ok(())
    }

    pub fn zero(&self) -> RingElement<I> {
        RingElement {
            comps: vec![I::zero(); self.len()],
        }
    }

    pub fn one(&self) -> RingElement<I> {
        self.from_int(I::one())
    }

    pub fn add(&self, a: &RingElement<I>, b: &RingElement<I>) -> RingElement<I> {
        self.map2(a, b, |i, x, y, _| self.reduce(i, x.clone() + y.clone()))
    }

    pub fn sub(&self, a: &RingElement<I>, b: &RingElement<I>) -> RingElement<I> {
        self.map2(a, b, |i, x, y, _| self.reduce(i, x.clone() - y.clone()))
    }

    pub fn neg(&self, a: &RingElement<I>) -> RingElement<I> {
        self.map1(a, |i, x, _| self.reduce(i, -x.clone()))
    }

    pub fn mul(&self, a: &RingElement<I>, b: &RingElement<I>) -> RingElement<I> {
        self.map2(a, b, |i, x, y, _| self.reduce(i, x.clone() * y.clone()))
    }

    pub fn is_unit(&self, a: &RingElement<I>) -> bool {
        a.comps.iter().zip(&self.moduli).all(|(x, n)| {
            if n.is_zero() {
                x.abs().is_one()
            } else {
                x.gcd(n).is_one()
            }
        })
    }

    /// True when `a` kills some nonzero element.
    pub fn is_zero_divisor(&self, a: &RingElement<I>) -> bool {
        !self.annihilator(a).is_zero()
    }

    /// Inverse of a unit; `None` when `a` is not a unit.
    pub fn inverse(&self, a: &RingElement<I>) -> Option<RingElement<I>> {
        let mut comps = Vec::with_capacity(self.len());
        for (x, n) in a.comps.iter().zip(&self.moduli) {
            comps.push(inverse_component(x, n)?);
        }
        Some(RingElement { comps })
    }

    /// The divisor part of a unit-divisor form as a ring element.
    pub fn divisor_element(&self, form: &UnitDivisorForm<I>) -> RingElement<I> {
        self.normalize(form.divisor.clone()).expect("divisor has ring arity")
    }

    pub fn unit_divisor_form(&self, a: &RingElement<I>) -> UnitDivisorForm<I> {
        let mut unit = Vec::with_capacity(self.len());
        let mut divisor = Vec::with_capacity(self.len());
        for (x, n) in a.comps.iter().zip(&self.moduli) {
            let (u, d) = unit_divisor_component(x, n);
            unit.push(u);
            divisor.push(d);
        }
        UnitDivisorForm {
            unit: RingElement { comps: unit },
            divisor,
        }
    }

    /// Canonical gcd: integer gcd of the divisor parts, reduced.
    pub fn gcd(&self, a: &RingElement<I>, b: &RingElement<I>) -> RingElement<I> {
        self.map2(a, b, |i, x, y, n| {
            let g = divisor_component(x, n).gcd(&divisor_component(y, n));
            self.reduce(i, g)
        })
    }

    /// Canonical lcm: integer lcm of the divisor parts, reduced (so it may be 0).
    pub fn lcm(&self, a: &RingElement<I>, b: &RingElement<I>) -> RingElement<I> {
        self.map2(a, b, |i, x, y, n| {
            let l = divisor_component(x, n).lcm(&divisor_component(y, n));
            self.reduce(i, l)
        })
    }

    /// Returns the canonical `q` with `q * a = b`.
    ///
    /// A component where both sides vanish yields 1, the quotient of the
    /// divisor parts.
    pub fn divide_exact(&self, b: &RingElement<I>, a: &RingElement<I>) -> Result<RingElement<I>> {
        let mut comps = Vec::with_capacity(self.len());
        for i in 0..self.len() {
            let (x, y, n) = (&a.comps[i], &b.comps[i], &self.moduli[i]);
            let q = if n.is_zero() {
                if x.is_zero() {
                    if y.is_zero() {
                        I::one()
                    } else {
                        return Err(AlgebraError::NotDivisible);
                    }
                } else if y.is_multiple_of(x) {
                    y.clone() / x.clone()
                } else {
                    return Err(AlgebraError::NotDivisible);
                }
            } else {
                let (ua, da) = unit_divisor_component(x, n);
                let (ub, db) = unit_divisor_component(y, n);
                if !db.is_multiple_of(&da) {
                    return Err(AlgebraError::NotDivisible);
                }
                let inv = inverse_component(&ua, n).expect("unit part is invertible");
                (db / da * ub * inv).mod_floor(n)
            };
            comps.push(q);
        }
        Ok(RingElement { comps })
    }

    /// Cofactors `(l, r)` with `l * a = r * b`, an associate of `lcm(a, b)`.
    ///
    /// The common value is the canonical lcm times the unit part of `b`, so
    /// equal arguments give `(1, 1)`. A component where either side vanishes
    /// gives `(0, 0)`.
    pub fn sr_coefficients(&self, a: &RingElement<I>, b: &RingElement<I>) -> (RingElement<I>, RingElement<I>) {
        let mut left = Vec::with_capacity(self.len());
        let mut right = Vec::with_capacity(self.len());
        for i in 0..self.len() {
            let (x, y, n) = (&a.comps[i], &b.comps[i], &self.moduli[i]);
            if x.is_zero() || y.is_zero() {
                left.push(I::zero());
                right.push(I::zero());
            } else {
                let (ux, dx) = unit_divisor_component(x, n);
                let (uy, dy) = unit_divisor_component(y, n);
                let l = dx.lcm(&dy);
                let ix = inverse_component(&ux, n).expect("unit part is invertible");
                left.push(self.reduce(i, l.clone() / dx * uy * ix));
                right.push(self.reduce(i, l / dy));
            }
        }
        (RingElement { comps: left }, RingElement { comps: right })
    }

    /// Generator of the annihilator ideal of `a`.
    pub fn annihilator(&self, a: &RingElement<I>) -> RingElement<I> {
        self.map1(a, |_, x, n| {
            if n.is_zero() {
                if x.is_zero() {
                    I::one()
                } else {
                    I::zero()
                }
            } else {
                (n.clone() / x.gcd(n)).mod_floor(n)
            }
        })
    }

    /// Solves `c = sum b_j * gens_j`.
    ///
    /// Components are independent. Over `Z/N` the modulus is adjoined as an
    /// extra generator and its multiplier discarded. A generator whose
    /// component vanishes contributes nothing there and receives multiplier 1.
    pub fn solve_membership(&self, c: &RingElement<I>, gens: &[&RingElement<I>]) -> Option<Vec<RingElement<I>>> {
        let mut out: Vec<Vec<I>> = vec![Vec::with_capacity(self.len()); gens.len()];
        for i in 0..self.len() {
            let (g, mut coeffs, nz) = self.component_bezout(i, gens.iter().map(|e| &e.comps[i]));
            let target = &c.comps[i];
            let k = if g.is_zero() {
                if !target.is_zero() {
                    return None;
                }
                I::zero()
            } else {
                if !target.is_multiple_of(&g) {
                    return None;
                }
                target.clone() / g
            };
            for x in coeffs.iter_mut() {
                *x = self.reduce(i, x.clone() * k.clone());
            }
            let mut next = coeffs.into_iter();
            for (j, slot) in out.iter_mut().enumerate() {
                if nz.contains(&j) {
                    slot.push(next.next().expect("one coefficient per nonzero generator"));
                } else {
                    slot.push(I::one());
                }
            }
        }
        Some(out.into_iter().map(|comps| RingElement { comps }).collect())
    }

    /// Canonical gcd of a list together with Bezout multipliers.
    pub fn bezout_combine(&self, coeffs: &[&RingElement<I>]) -> (RingElement<I>, Vec<RingElement<I>>) {
        let mut gcd = Vec::with_capacity(self.len());
        let mut mult: Vec<Vec<I>> = vec![Vec::with_capacity(self.len()); coeffs.len()];
        for i in 0..self.len() {
            let (g, cs, nz) = self.component_bezout(i, coeffs.iter().map(|e| &e.comps[i]));
            gcd.push(self.reduce(i, g));
            let mut next = cs.into_iter();
            for (j, slot) in mult.iter_mut().enumerate() {
                if nz.contains(&j) {
                    let v = next.next().expect("one coefficient per nonzero entry");
                    slot.push(self.reduce(i, v));
                } else {
                    slot.push(I::one());
                }
            }
        }
        (
            RingElement { comps: gcd },
            mult.into_iter().map(|comps| RingElement { comps }).collect(),
        )
    }

    /// Extended gcd of the nonzero values in component `i` (plus the modulus).
    /// Returns the gcd, the multipliers of the nonzero values, and their indices.
    fn component_bezout<'a>(&self, i: usize, values: impl Iterator<Item = &'a I>) -> (I, Vec<I>, Vec<usize>) {
        let n = &self.moduli[i];
        let mut nz = Vec::new();
        let mut vals = Vec::new();
        for (j, v) in values.enumerate() {
            if !v.is_zero() {
                nz.push(j);
                vals.push(v.clone());
            }
        }
        if !n.is_zero() {
            vals.push(n.clone());
        }
        let (g, mut coeffs) = ext_gcd_fold(&vals);
        coeffs.truncate(nz.len());
        (g, coeffs, nz)
    }
}

fn divisor_component<I: Int>(x: &I, n: &I) -> I {
    if n.is_zero() {
        x.abs()
    } else {
        x.gcd(n)
    }
}

fn unit_divisor_component<I: Int>(x: &I, n: &I) -> (I, I) {
    if n.is_zero() {
        let u = if x.is_zero() { I::one() } else { x.signum() };
        return (u, x.abs());
    }
    let d = x.gcd(n);
    let m = n.clone() / d.clone();
    let mut u = (x.clone() / d.clone()).mod_floor(&m);
    if u.is_zero() {
        // only when m == 1
        u = I::one();
    }
    while !u.gcd(n).is_one() {
        u = u + m.clone();
    }
    (u, d)
}

fn inverse_component<I: Int>(x: &I, n: &I) -> Option<I> {
    if n.is_zero() {
        return if x.abs().is_one() { Some(x.clone()) } else { None };
    }
    let (g, s, _) = ext_gcd(x, n);
    if g.is_one() {
        Some(s.mod_floor(n))
    } else {
        None
    }
}
