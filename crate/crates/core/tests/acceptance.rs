//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::cmp::Ordering;
use std::fmt::Write as _;
use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use pirgb::division::{divide, in_leading_module};
use pirgb::groebner::{criterion_check, groebner_basis, minimize, same_leading_module};
use pirgb::oracle::{member_bruteforce, DegreeBound};
use pirgb::resolution::{resolve, ResolutionStatus, ResolveOptions};
use pirgb::syzygy::{collapse_same_lm, syzygy_basis};
use pirgb::text::{parse_element, parse_problem};
use pirgb::{
    FreeModule, GroebnerBasis, ModuleElement, ModuleOrder, Monomial, MonomialOrder, MonomialOrderKind, RingElement,
    RingSpec, Term,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type B = BigInt;
type M = FreeModule<B>;
type E = ModuleElement<B>;

const CHILD_ENV: &str = "PIRGB_ACCEPTANCE_TRACE_CHILD";

type Criterion = (&'static str, fn() -> Outcome, Option<Duration>);

struct Outcome {
    ok: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: true,
        detail: detail.into(),
    }
}

fn fail(detail: impl Into<String>) -> Outcome {
    Outcome {
        ok: false,
        detail: detail.into(),
    }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)*) => {
        if !$cond {
            return fail(format!($($msg)*));
        }
    };
}

const EXAMPLE1: &str = "ring ZZ/2 x ZZ/4 x ZZ/8\nvars X Y\norder lex\n\
    gen (0,2,2)*X^2 + (1,1,0)\ngen (1,2,4)*Y + (0,3,0)\ngen (1,0,0)\n";
const EXAMPLE2: &str = "ring ZZ/2 x ZZ/4 x ZZ/8\nvars X Y\norder lex\nrank 2\nmodule_order pot\n\
    gen (0,2,1)*X*Y^2*e2 + (0,1,0)*e2\ngen (1,2,2)*X^2*Y*e1 + (0,1,4)*X*e2\ngen (1,0,1)*e2\n";
const EXAMPLE3: &str = "ring ZZ x ZZ\nvars x y\norder lex\n\
    gen (2,0)*x^2*y + (1,2)\ngen (0,3)*x*y^2 + (1,1)*y\ngen (3,4)*x\n";

fn elems(m: &M, src: &[&str]) -> Vec<E> {
    src.iter()
        .map(|s| parse_element(m, s).expect("literal parses"))
        .collect()
}

fn associates(m: &M, a: &RingElement<B>, b: &RingElement<B>) -> bool {
    m.ring().gcd(a, a) == m.ring().gcd(b, b)
}

/// Every expected leading term matches exactly one basis leading term up to a unit.
fn leading_terms_match(m: &M, basis: &[E], expected: &[E]) -> bool {
    basis.len() == expected.len()
        && expected.iter().all(|e| {
            let t = e.leading_term().expect("nonzero");
            basis
                .iter()
                .filter(|f| {
                    let s = f.leading_term().expect("nonzero");
                    s.mono == t.mono && s.basis == t.basis && associates(m, &s.coeff, &t.coeff)
                })
                .count()
                == 1
        })
}

fn criterion1() -> Outcome {
    let p = parse_problem::<B>(EXAMPLE1).expect("example parses");
    let m = &p.module;
    let gb = match groebner_basis(m, &p.generators) {
        Ok(gb) => gb,
        Err(e) => return fail(e.to_string()),
    };
    ensure!(criterion_check(m, gb.elements()).passed(), "basis fails the criterion");
    let min = minimize(&gb).expect("certified basis minimizes");
    let expected = elems(m, &["(0,2,2)*X^2", "(1,2,4)*Y", "(1,0,0)", "(0,3,0)"]);
    ensure!(min.len() == 4, "minimized basis has {} elements", min.len());
    ensure!(
        same_leading_module(m, min.elements(), &expected),
        "leading-term module differs"
    );
    ensure!(
        leading_terms_match(m, min.elements(), &expected),
        "leading terms differ up to units"
    );
    ensure!(min.contains(&expected[3]), "(0,3,0) not reported as a member");
    pass(format!("{} elements before minimizing, 4 after", gb.len()))
}

fn criterion2() -> Outcome {
    let p = parse_problem::<B>(EXAMPLE2).expect("example parses");
    let m = &p.module;
    let gb = match groebner_basis(m, &p.generators) {
        Ok(gb) => gb,
        Err(e) => return fail(e.to_string()),
    };
    let min = minimize(&gb).expect("certified basis minimizes");
    ensure!(
        criterion_check(m, min.elements()).passed(),
        "minimized basis fails the criterion"
    );
    let expected = elems(m, &["(1,2,2)*X^2*Y*e1", "(1,0,1)*e2", "(0,1,0)*e2"]);
    ensure!(min.len() == 3, "minimized basis has {} elements", min.len());
    ensure!(
        leading_terms_match(m, min.elements(), &expected),
        "leading terms differ up to units"
    );
    ensure!(
        p.generators.iter().all(|g| min.contains(g)),
        "an input does not reduce to zero"
    );
    pass(format!("{} elements before minimizing, 3 after", gb.len()))
}

fn criterion3() -> Outcome {
    let p = parse_problem::<B>(EXAMPLE3).expect("example parses");
    let m = &p.module;
    let min = match groebner_basis(m, &p.generators).and_then(|gb| minimize(&gb)) {
        Ok(b) => b,
        Err(e) => return fail(e.to_string()),
    };
    let expected = elems(m, &["(0,3)*x*y^2", "(0,2)", "(1,0)"]);
    ensure!(
        leading_terms_match(m, min.elements(), &expected),
        "minimized leading terms differ up to units"
    );

    let basis = elems(m, &["(0,3)*x*y^2 + (1,1)*y", "(0,2)", "(1,0)"]);
    let gb = GroebnerBasis::certify(m, basis).expect("valid elements");
    ensure!(gb.is_certified(), "reference basis fails the criterion");
    let syz = match syzygy_basis(&gb) {
        Ok(s) => s,
        Err(e) => return fail(e.to_string()),
    };
    let l = syz.basis.module().clone();
    let relations = elems(
        &l,
        &[
            "(0,2)*g1 - (0,3)*x*y^2*g2 - y*g2",
            "(1,0)*g1 - y*g3",
            "(1,0)*g2",
            "(0,1)*g3",
        ],
    );
    let got: Vec<E> = syz.relations.iter().map(|r| r.element.clone()).collect();
    ensure!(got == relations, "relations differ: {got:?}");
    let collapsed = match collapse_same_lm(&syz.basis) {
        Ok(c) => c,
        Err(e) => return fail(e.to_string()),
    };
    let reference = elems(&l, &["(1,2)*g1 - (0,3)*x*y^2*g2 - y*g2 - y*g3", "(1,0)*g2", "(0,1)*g3"]);
    ensure!(collapsed.len() == 3, "collapse kept {} relations", collapsed.len());
    let mutual = reference.iter().all(|r| collapsed.contains(r))
        && collapsed
            .elements()
            .iter()
            .all(|c| pirgb::reduces_to_zero(&l, c, &reference));
    ensure!(mutual, "collapsed relations do not mutually reduce with the reference");

    let res = match resolve(m, &p.generators, &ResolveOptions::new(4).collapse(true)) {
        Ok(r) => r,
        Err(e) => return fail(e.to_string()),
    };
    ensure!(res.ranks == vec![3, 3, 2, 2], "ranks {:?}", res.ranks);
    ensure!(
        matches!(res.status, ResolutionStatus::Periodic { .. }),
        "status {:?}",
        res.status
    );
    ensure!(res.composition_is_zero(), "differentials do not compose to zero");
    pass(format!("ranks {:?}, {:?}", res.ranks, res.status))
}

fn random_module(rng: &mut ChaCha8Rng, moduli: &[u64], nvars: usize, rank: usize) -> M {
    let kind = [
        MonomialOrderKind::Lex,
        MonomialOrderKind::GrLex,
        MonomialOrderKind::GrevLex,
    ][rng.gen_range(0..3)];
    let base = MonomialOrder::new(kind, nvars);
    let order = if rng.gen_bool(0.5) {
        ModuleOrder::pot(base)
    } else {
        ModuleOrder::top(base)
    };
    M::with_default_vars(RingSpec::from_moduli(moduli).expect("valid moduli"), nvars, rank, order)
        .expect("valid module")
}

fn random_coeff(rng: &mut ChaCha8Rng, m: &M, nonzero_components: bool) -> RingElement<B> {
    let raw: Vec<B> = m
        .ring()
        .moduli()
        .iter()
        .map(|n| {
            let v = if n == &B::from(0) {
                let v = rng.gen_range(-4i64..=4);
                if nonzero_components && v == 0 {
                    1
                } else {
                    v
                }
            } else {
                let n: i64 = n.to_string().parse().expect("small modulus");
                rng.gen_range(if nonzero_components { 1 } else { 0 }..n)
            };
            B::from(v)
        })
        .collect();
    m.ring().normalize(raw).expect("arity")
}

fn random_element(rng: &mut ChaCha8Rng, m: &M, max_terms: usize, max_deg: u32, nonzero_components: bool) -> E {
    loop {
        let nterms = rng.gen_range(1..=max_terms);
        let terms = (0..nterms)
            .map(|_| {
                let deg = rng.gen_range(0..=max_deg);
                let mut exps = vec![0u32; m.nvars()];
                for _ in 0..deg {
                    exps[rng.gen_range(0..m.nvars())] += 1;
                }
                Term::new(
                    random_coeff(rng, m, nonzero_components),
                    Monomial::new(exps),
                    rng.gen_range(0..m.rank()),
                )
            })
            .collect();
        let f = m.element(terms).expect("valid terms");
        if !f.is_zero() {
            return f;
        }
    }
}

fn criterion4() -> Outcome {
    let rings: [(&[u64], usize); 3] = [(&[6], 1), (&[4, 9], 2), (&[0, 8], 2)];
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    let (mut ideals, mut relations, mut elements) = (0, 0, 0);
    for case in 0..210 {
        let (moduli, nvars) = rings[case % 3];
        let m = random_module(&mut rng, moduli, nvars, 1);
        let ngens = rng.gen_range(1..=3);
        let gens: Vec<E> = (0..ngens).map(|_| random_element(&mut rng, &m, 3, 3, false)).collect();
        let gb = match groebner_basis(&m, &gens) {
            Ok(gb) => gb,
            Err(e) => return fail(format!("case {case}: {e}")),
        };
        ensure!(
            criterion_check(&m, gb.elements()).passed(),
            "case {case}: criterion re-check fails"
        );
        ensure!(
            gens.iter().all(|g| gb.contains(g)),
            "case {case}: an input does not reduce to zero"
        );
        let syz = match syzygy_basis(&gb) {
            Ok(s) => s,
            Err(e) => return fail(format!("case {case}: {e}")),
        };
        for r in &syz.relations {
            ensure!(
                m.substitute(&r.element, gb.elements()).map(|v| v.is_zero()) == Ok(true),
                "case {case}: relation {:?} does not vanish",
                r.kind
            );
        }
        ideals += 1;
        elements += gb.len();
        relations += syz.relations.len();
    }
    pass(format!(
        "{ideals} ideals, {elements} basis elements, {relations} relations checked"
    ))
}

fn criterion5() -> Outcome {
    let rings: [(&[u64], usize); 3] = [(&[6], 1), (&[4, 9], 2), (&[2, 4, 8], 2)];
    let bound = DegreeBound::new(3);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let (mut members, mut non_members, mut queries) = (0, 0, 0);
    for case in 0..120 {
        let (moduli, nvars) = rings[case % 3];
        let m = random_module(&mut rng, moduli, nvars, 1);
        let ngens = rng.gen_range(1..=3);
        let gens: Vec<E> = (0..ngens).map(|_| random_element(&mut rng, &m, 2, 2, false)).collect();
        let gb = match groebner_basis(&m, &gens) {
            Ok(gb) => gb,
            Err(e) => return fail(format!("case {case}: {e}")),
        };
        // a combination with multipliers inside the bound, then a random target
        let constructed = {
            let coeffs: Vec<_> = gens
                .iter()
                .map(|_| {
                    let p = random_element(&mut rng, &m, 3, bound.max_total_degree, false);
                    m.coordinates(&p).remove(0)
                })
                .collect();
            m.combine(&coeffs, &gens).expect("same module")
        };
        let random = random_element(&mut rng, &m, 2, 2, false);
        for (label, f) in [("constructed", &constructed), ("random", &random)] {
            queries += 1;
            let engine = gb.contains(f);
            let oracle = match member_bruteforce(&m, f, &gens, bound) {
                Ok(v) => v.is_member(),
                Err(e) => return fail(format!("case {case}: oracle {e}")),
            };
            if label == "constructed" {
                ensure!(oracle, "case {case}: oracle misses a constructed member");
            }
            ensure!(
                engine == oracle,
                "case {case} ({label}): engine says {engine}, oracle says {oracle}"
            );
            if engine {
                members += 1;
            } else {
                non_members += 1;
            }
        }
    }
    pass(format!(
        "{queries} queries at degree bound 3: {members} members, {non_members} non-members"
    ))
}

fn all_lcs_nonzero_divisors(m: &M, basis: &[E]) -> bool {
    basis
        .iter()
        .all(|f| !m.ring().is_zero_divisor(&f.leading_term().expect("nonzero").coeff))
}

fn criterion6() -> Outcome {
    let rings: [(&[u64], usize); 2] = [(&[0], 1), (&[0, 0], 2)];
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut qualified = 0;
    let mut worst = 0;
    let mut plain_finite = 0;
    let mut attempts = 0;
    while qualified < 60 {
        attempts += 1;
        ensure!(
            attempts <= 3000,
            "only {qualified} qualifying ideals in {attempts} draws"
        );
        let (moduli, nvars) = rings[attempts % 2];
        let m = random_module(&mut rng, moduli, nvars, 1);
        let ngens = rng.gen_range(1..=3);
        let gens: Vec<E> = (0..ngens).map(|_| random_element(&mut rng, &m, 3, 2, true)).collect();
        let gb = match groebner_basis(&m, &gens).and_then(|g| minimize(&g)) {
            Ok(gb) => gb,
            Err(e) => return fail(format!("draw {attempts}: {e}")),
        };
        if !all_lcs_nonzero_divisors(&m, gb.elements()) {
            continue;
        }
        qualified += 1;
        let res = match resolve(&m, &gens, &ResolveOptions::new(nvars + 3).collapse(true)) {
            Ok(r) => r,
            Err(e) => return fail(format!("draw {attempts}: {e}")),
        };
        ensure!(
            res.composition_is_zero(),
            "draw {attempts}: differentials do not compose to zero"
        );
        match res.status {
            ResolutionStatus::Finite { length } => {
                ensure!(
                    length <= nvars + 1,
                    "draw {attempts}: length {length} exceeds {} (ranks {:?})",
                    nvars + 1,
                    res.ranks
                );
                worst = worst.max(length);
            }
            other => return fail(format!("draw {attempts}: status {other:?}, ranks {:?}", res.ranks)),
        }
        // without merging, constant leading terms on one basis element keep pairing up
        let plain = resolve(&m, &gens, &ResolveOptions::new(nvars + 1)).expect("same input resolves");
        if matches!(plain.status, ResolutionStatus::Finite { .. }) {
            plain_finite += 1;
        }
    }
    pass(format!(
        "{qualified} ideals resolved with merging, longest length {worst}; {plain_finite} also finite within n+1 unmerged"
    ))
}

/// FNV-1a, stable across processes.
fn digest(text: &str) -> u64 {
    text.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| {
        (h ^ b as u64).wrapping_mul(0x0100_0000_01b3)
    })
}

/// Runs the division sample; returns the failures and a digest of all traces.
fn division_sample() -> (Vec<String>, u64, usize) {
    let rings: [(&[u64], usize); 4] = [(&[6], 1), (&[4, 9], 2), (&[0, 8], 2), (&[2, 4, 8], 2)];
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut failures = Vec::new();
    let mut transcript = String::new();
    let calls = 600;
    for case in 0..calls {
        let (moduli, nvars) = rings[case % 4];
        let rank = rng.gen_range(1..=2);
        let m = random_module(&mut rng, moduli, nvars, rank);
        let f = random_element(&mut rng, &m, 5, 3, false);
        let ndiv = rng.gen_range(1..=4);
        let divisors: Vec<E> = (0..ndiv).map(|_| random_element(&mut rng, &m, 3, 2, false)).collect();
        let d = divide(&m, &f, &divisors);
        let back = m
            .add(&m.combine(&d.quotients, &divisors).expect("same module"), &d.remainder)
            .expect("same module");
        if back != f {
            failures.push(format!("case {case}: reconstruction"));
        }
        let lf = f.leading_term().expect("nonzero");
        for (q, fj) in d.quotients.iter().zip(&divisors) {
            if let (Some(lq), Some(lj)) = (q.leading(), fj.leading_term()) {
                if m.order().cmp(&lq.mono.mul(&lj.mono), lj.basis, &lf.mono, lf.basis) == Ordering::Greater {
                    failures.push(format!("case {case}: degree bound"));
                }
            }
        }
        if d.remainder.terms().iter().any(|t| in_leading_module(&m, t, &divisors)) {
            failures.push(format!("case {case}: reducible remainder term"));
        }
        writeln!(transcript, "{case} {:?}", d.trace).expect("write to string");
    }
    (failures, digest(&transcript), calls)
}

fn criterion7() -> Outcome {
    let (failures, local, calls) = division_sample();
    ensure!(
        failures.is_empty(),
        "{} violations, first: {}",
        failures.len(),
        failures[0]
    );
    let exe = std::env::current_exe().expect("test binary path");
    let out = match Command::new(exe).env(CHILD_ENV, "1").output() {
        Ok(o) => o,
        Err(e) => return fail(format!("could not spawn second process: {e}")),
    };
    let child = String::from_utf8_lossy(&out.stdout);
    let remote = child.trim().parse::<u64>();
    ensure!(
        remote == Ok(local),
        "trace digests differ: {local:016x} vs {:?}",
        child.trim()
    );
    pass(format!(
        "{calls} divisions, trace digest {local:016x} identical in two processes"
    ))
}

fn main() {
    if std::env::var_os(CHILD_ENV).is_some() {
        let (_, d, _) = division_sample();
        println!("{d}");
        return;
    }
    let criteria: [Criterion; 7] = [
        (
            "golden basis over Z/2 x Z/4 x Z/8",
            criterion1,
            Some(Duration::from_secs(1)),
        ),
        ("golden rank-2 module basis", criterion2, Some(Duration::from_secs(1))),
        (
            "golden syzygies and periodic resolution over Z x Z",
            criterion3,
            Some(Duration::from_secs(1)),
        ),
        (
            "criterion soundness on random ideals",
            criterion4,
            Some(Duration::from_secs(60)),
        ),
        (
            "oracle equivalence for membership",
            criterion5,
            Some(Duration::from_secs(120)),
        ),
        ("resolution length bound", criterion6, Some(Duration::from_secs(120))),
        ("division contract and trace determinism", criterion7, None),
    ];
    let mut failed = 0;
    for (i, (name, run, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let mut outcome = run();
        let took = start.elapsed();
        if let Some(limit) = limit {
            if took > *limit {
                outcome.ok = false;
                outcome.detail = format!("{}; exceeded the {:?} limit", outcome.detail, limit);
            }
        }
        let limit_text = limit.map_or("none".to_string(), |l| format!("{l:?}"));
        println!(
            "criterion {} {}: {} ({}; exact arithmetic, tolerance 0; runtime {:.3?}, limit {})",
            i + 1,
            if outcome.ok { "PASS" } else { "FAIL" },
            name,
            outcome.detail,
            took,
            limit_text
        );
        if !outcome.ok {
            failed += 1;
        }
    }
    if failed > 0 {
        eprintln!("{failed} acceptance criteria failed");
        std::process::exit(1);
    }
}
