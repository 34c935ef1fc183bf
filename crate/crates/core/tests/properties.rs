use num_bigint::BigInt;
use pirgb::groebner::{buchberger, criterion_check, critical_element, minimize, same_leading_module, BuchbergerConfig};
use pirgb::oracle::{member_bruteforce, random_syzygy, DegreeBound};
use pirgb::resolution::{resolve, ResolveOptions};
use pirgb::syzygy::syzygy_basis;
use pirgb::{
    reduces_to_zero, FreeModule, GroebnerBasis, ModuleElement, ModuleOrder, Monomial, MonomialOrder, MonomialOrderKind,
    RingSpec, Term,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type M = FreeModule<BigInt>;
type E = ModuleElement<BigInt>;

const FINITE: [(&[u64], usize); 4] = [(&[6], 1), (&[4, 9], 2), (&[2, 4], 2), (&[8], 2)];

fn module(rng: &mut ChaCha8Rng, moduli: &[u64], nvars: usize, rank: usize) -> M {
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
    M::with_default_vars(RingSpec::from_moduli(moduli).unwrap(), nvars, rank, order).unwrap()
}

fn element(rng: &mut ChaCha8Rng, m: &M, max_terms: usize, max_deg: u32) -> E {
    loop {
        let terms = (0..rng.gen_range(1..=max_terms))
            .map(|_| {
                let mut exps = vec![0u32; m.nvars()];
                for _ in 0..rng.gen_range(0..=max_deg) {
                    exps[rng.gen_range(0..m.nvars())] += 1;
                }
                let raw: Vec<BigInt> = m
                    .ring()
                    .moduli()
                    .iter()
                    .map(|n| {
                        let n: i64 = n.to_string().parse().unwrap();
                        BigInt::from(if n == 0 {
                            rng.gen_range(-3..=3)
                        } else {
                            rng.gen_range(0..n)
                        })
                    })
                    .collect();
                Term::new(
                    m.ring().normalize(raw).unwrap(),
                    Monomial::new(exps),
                    rng.gen_range(0..m.rank()),
                )
            })
            .collect();
        let f = m.element(terms).unwrap();
        if !f.is_zero() {
            return f;
        }
    }
}

/// A random module and generating set from `seed`.
fn instance(seed: u64, rank: usize, max_gens: usize, max_deg: u32) -> (M, Vec<E>, ChaCha8Rng) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (moduli, nvars) = FINITE[rng.gen_range(0..FINITE.len())];
    let m = module(&mut rng, moduli, nvars, rank);
    let gens = (0..rng.gen_range(1..=max_gens))
        .map(|_| element(&mut rng, &m, 3, max_deg))
        .collect();
    (m, gens, rng)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, ..ProptestConfig::default() })]

    #[test]
    fn buchberger_is_sound(seed in any::<u64>(), rank in 1usize..=2) {
        let (m, gens, _) = instance(seed, rank, 3, 3);
        let config = BuchbergerConfig { track_provenance: true, ..BuchbergerConfig::default() };
        let gb = buchberger(&m, &gens, &config).unwrap();
        prop_assert!(gb.is_certified());
        prop_assert!(criterion_check(&m, gb.elements()).passed());
        for g in &gens {
            prop_assert!(gb.contains(g));
        }
        let provenance = gb.provenance().unwrap();
        for (f, coords) in gb.elements().iter().zip(provenance) {
            prop_assert_eq!(&m.combine(coords, &gens).unwrap(), f);
        }
    }

    #[test]
    fn leading_module_ignores_input_order(seed in any::<u64>()) {
        let (m, gens, mut rng) = instance(seed, 1, 3, 3);
        let mut shuffled = gens.clone();
        shuffled.shuffle(&mut rng);
        let a = minimize(&pirgb::groebner_basis(&m, &gens).unwrap()).unwrap();
        let b = minimize(&pirgb::groebner_basis(&m, &shuffled).unwrap()).unwrap();
        prop_assert!(same_leading_module(&m, a.elements(), b.elements()));
        prop_assert!(b.elements().iter().all(|f| a.contains(f)));
    }

    #[test]
    fn membership_agrees_with_the_oracle(seed in any::<u64>()) {
        let (m, gens, mut rng) = instance(seed, 1, 2, 2);
        let gb = pirgb::groebner_basis(&m, &gens).unwrap();
        let bound = DegreeBound::new(2);
        // inside the bound both must say member
        let coeffs: Vec<_> = gens
            .iter()
            .map(|_| m.coordinates(&element(&mut rng, &m, 2, 2)).remove(0))
            .collect();
        let inside = m.combine(&coeffs, &gens).unwrap();
        prop_assert!(gb.contains(&inside));
        prop_assert!(member_bruteforce(&m, &inside, &gens, bound).unwrap().is_member());
        // an oracle witness is a proof, so the engine has to follow
        let f = element(&mut rng, &m, 2, 2);
        if member_bruteforce(&m, &f, &gens, bound).unwrap().is_member() {
            prop_assert!(gb.contains(&f));
        }
        if !gb.contains(&f) {
            prop_assert!(!member_bruteforce(&m, &f, &gens, bound).unwrap().is_member());
        }
    }

    #[test]
    fn syzygies_vanish_and_have_closed_form_leads(seed in any::<u64>(), rank in 1usize..=2) {
        let (m, gens, _) = instance(seed, rank, 3, 2);
        let gb = pirgb::groebner_basis(&m, &gens).unwrap();
        let syz = syzygy_basis(&gb).unwrap();
        let l = syz.basis.module();
        prop_assert!(syz.basis.is_certified());
        for r in &syz.relations {
            prop_assert!(m.substitute(&r.element, gb.elements()).unwrap().is_zero());
            let c = critical_element(&m, gb.elements(), r.kind).unwrap();
            let a = match r.kind {
                pirgb::groebner::CriticalKind::Pair(a, _) | pirgb::groebner::CriticalKind::Annihilator(a) => a,
            };
            let lt = r.element.leading_term().unwrap();
            prop_assert_eq!(lt, &Term::new(c.u_left.coeff.clone(), c.u_left.mono.clone(), a));
            prop_assert!(l.validate(&r.element).is_ok());
        }
    }

    #[test]
    fn sampled_syzygies_reduce_to_zero(seed in any::<u64>()) {
        let (m, gens, mut rng) = instance(seed, 1, 3, 2);
        let gb = minimize(&pirgb::groebner_basis(&m, &gens).unwrap()).unwrap();
        if gb.len() > 4 {
            return Ok(());
        }
        let syz = syzygy_basis(&gb).unwrap();
        let l = syz.basis.module();
        let relations: Vec<E> = syz.relations.iter().map(|r| r.element.clone()).collect();
        let coords = random_syzygy(&m, gb.elements(), DegreeBound::new(2), rng.gen()).unwrap();
        let z = l.from_coordinates(&coords);
        prop_assert!(m.substitute(&z, gb.elements()).unwrap().is_zero());
        prop_assert!(reduces_to_zero(l, &z, &relations));
    }

    #[test]
    fn resolution_steps_compose_to_zero(seed in any::<u64>(), collapse in any::<bool>()) {
        let (m, gens, _) = instance(seed, 1, 3, 2);
        let res = resolve(&m, &gens, &ResolveOptions::new(3).collapse(collapse)).unwrap();
        prop_assert!(res.composition_is_zero());
        prop_assert_eq!(res.ranks.len(), res.differentials.len());
        for (k, d) in res.differentials.iter().enumerate() {
            let target = if k == 0 { &m } else { &res.modules[k - 1] };
            prop_assert!(GroebnerBasis::certify(target, d.clone()).unwrap().is_certified());
            prop_assert_eq!(d.len(), res.ranks[k]);
        }
    }

    #[test]
    fn stored_elements_are_normalized(seed in any::<u64>(), rank in 1usize..=3) {
        let (m, gens, _) = instance(seed, rank, 3, 3);
        for g in &gens {
            prop_assert_eq!(&m.renormalize(g), g);
        }
    }
}
