//! Gröbner bases, syzygies and free resolutions for submodules of `S^r`,
//! where `S = R[x_1, ..., x_n]` and `R = Z/N_1 x ... x Z/N_p` (`N_i = 0`
//! meaning `Z`).
//!
//! Everything is generic over the integer type backing coefficient
//! components; [`BigInt`](num_bigint::BigInt) and `i64` aliases are provided
//! below.
//!
//! ```
//! use pirgb::text::parse_problem;
//! use pirgb::groebner::{groebner_basis, minimize};
//!
//! let p = parse_problem::<num_bigint::BigInt>(
//!     "ring ZZ/2 x ZZ/4 x ZZ/8\nvars X Y\norder lex\n\
//!      gen (0,2,2)*X^2 + (1,1,0)\ngen (1,2,4)*Y + (0,3,0)\ngen (1,0,0)\n",
//! ).unwrap();
//! let gb = minimize(&groebner_basis(&p.module, &p.generators).unwrap()).unwrap();
//! assert_eq!(gb.len(), 4);
//! ```

pub mod coeff;
pub mod division;
pub mod error;
pub mod groebner;
pub mod oracle;
pub mod order;
pub mod poly;
pub mod resolution;
pub mod scalar;
pub mod syzygy;
pub mod text;

pub use coeff::{RingElement, RingSpec, UnitDivisorForm};
pub use division::{divide, reduces_to_zero, DivisionResult};
pub use error::{AlgebraError, Result};
pub use groebner::{buchberger, criterion_check, groebner_basis, minimize, BuchbergerConfig, GroebnerBasis};
pub use order::{ModuleOrder, MonomialOrder, MonomialOrderKind};
pub use poly::{FreeModule, ModuleElement, Monomial, PolyTerm, Polynomial, Term};
pub use resolution::{resolve, Resolution, ResolutionStatus, ResolveOptions};
pub use scalar::Int;
pub use syzygy::{collapse_same_lm, syzygy_basis, Syzygies, SyzygyRelation};
pub use text::{parse_problem, ProblemFile};

use num_bigint::BigInt;

pub type BigRingSpec = RingSpec<BigInt>;
pub type BigRingElement = RingElement<BigInt>;
pub type BigPolynomial = Polynomial<BigInt>;
pub type BigModuleElement = ModuleElement<BigInt>;
pub type BigFreeModule = FreeModule<BigInt>;
pub type BigGroebnerBasis = GroebnerBasis<BigInt>;
pub type BigResolution = Resolution<BigInt>;
pub type BigProblemFile = ProblemFile<BigInt>;

pub type SmallRingSpec = RingSpec<i64>;
pub type SmallRingElement = RingElement<i64>;
pub type SmallPolynomial = Polynomial<i64>;
pub type SmallModuleElement = ModuleElement<i64>;
pub type SmallFreeModule = FreeModule<i64>;
pub type SmallGroebnerBasis = GroebnerBasis<i64>;
pub type SmallResolution = Resolution<i64>;
pub type SmallProblemFile = ProblemFile<i64>;
