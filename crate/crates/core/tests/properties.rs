use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use grade3::altpf::{pfaffian, sub_pfaffians, v_j, v_odd, AltMatrix};
use grade3::ideal::{ann, random_form, GradedIdeal, InverseSystem};
use grade3::koszul::{betti, BettiTable};
use grade3::poly::{strand_basis, strand_dim};
use grade3::tor::TorBasis;
use grade3::trimres::{build_complex, build_complex_with_q, perturbed_q, TrimInput};
use grade3::{Field, Poly};

fn f() -> Field {
    Field::default()
}

fn random_poly(rng: &mut ChaCha8Rng, max_deg: u32) -> Poly {
    let mut p = Poly::zero(f());
    for d in 0..=max_deg {
        for m in strand_basis(d) {
            if rng.gen_bool(0.4) {
                p.add_term(m, rng.gen_range(0..f().p()));
            }
        }
    }
    p
}

fn random_alternating(seed: u64, size: usize) -> AltMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = AltMatrix::zero(f(), size);
    for i in 0..size {
        for j in i + 1..size {
            m.set(i, j, random_poly(&mut rng, 1));
        }
    }
    m
}

fn gorenstein(seed: u64, degree: u32) -> GradedIdeal {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let phi = random_form(f(), degree, &mut rng);
    ann(&InverseSystem::single(phi).unwrap(), degree + 1)
}

/// `Σ_i (-1)^i β_{i,j}` against the coefficients of `(1 - t)^3 · H(t)`.
fn euler_matches_hilbert(ideal: &GradedIdeal, t: &BettiTable, dmax: u32) -> bool {
    let h = ideal.hilbert(dmax).hf;
    let binom3 = [1i64, -3, 3, -1];
    (0..=dmax + 3).all(|j| {
        let rhs: i64 = (0..4).filter(|&k| k <= j && (j - k) as usize <= dmax as usize).map(|k| binom3[k as usize] * h[(j - k) as usize] as i64).sum();
        t.euler(j) == rhs
    })
}

fn family_trims() -> Vec<TrimInput> {
    let mut v = vec![TrimInput::new(v_odd(f(), 2).unwrap(), 4).unwrap(), TrimInput::new(v_odd(f(), 3).unwrap(), 6).unwrap()];
    for s in 2..=4 {
        v.push(TrimInput::new(v_j(f(), s, s).unwrap(), s + 1).unwrap());
    }
    v.push(TrimInput::new(v_j(f(), 3, 2).unwrap(), 3).unwrap());
    v.push(TrimInput::new(v_j(f(), 3, 2).unwrap(), 4).unwrap());
    v
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 24, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn pfaffian_squared_is_determinant(seed in any::<u64>(), size in 1usize..=6) {
        let m = random_alternating(seed, size);
        let det = m.to_poly_matrix().det();
        if size % 2 == 1 {
            prop_assert!(det.is_zero());
            prop_assert!(pfaffian(&m).is_err());
        } else {
            let pf = pfaffian(&m).unwrap();
            prop_assert_eq!(&pf * &pf, det);
        }
    }

    #[test]
    fn submaximal_pfaffians_are_syzygies(seed in any::<u64>(), half in 1usize..=3) {
        let m = random_alternating(seed, 2 * half + 1);
        let sys = sub_pfaffians(&m).unwrap();
        prop_assert!(sys.syzygy_residual().iter().all(Poly::is_zero));
    }

    #[test]
    fn gorenstein_tables_are_symmetric(seed in any::<u64>(), c in 2u32..=6) {
        let i = gorenstein(seed, c);
        let t = betti(&i, c + 1).unwrap();
        for (&(k, j), &b) in t.entries() {
            prop_assert_eq!(t.get(3 - k, c + 3 - j), b, "β_{},{}", k, j);
        }
        prop_assert!(euler_matches_hilbert(&i, &t, c + 1));
    }

    #[test]
    fn trims_drop_exactly_one_dimension(seed in any::<u64>(), c in 2u32..=5, pick in any::<prop::sample::Index>()) {
        let i = gorenstein(seed, c).minimalized();
        let index = pick.index(i.gens().len()) + 1;
        let j = i.trim(index).unwrap();
        let lost: usize = (0..=c + 1).map(|d| i.strand_dim(d) - j.strand_dim(d)).sum();
        prop_assert_eq!(lost, 1);
        let t = betti(&j, c + 2).unwrap();
        prop_assert!(euler_matches_hilbert(&j, &t, c + 2));
    }

    #[test]
    fn tor_products_are_graded_commutative(seed in any::<u64>(), c in 3u32..=4, pick in any::<prop::sample::Index>()) {
        let i = gorenstein(seed, c).minimalized();
        let index = pick.index(i.gens().len()) + 1;
        let tb = TorBasis::from_ideal(&i.trim(index).unwrap(), c + 2).unwrap();
        let (t1, t2) = (tb.basis(1), tb.basis(2));
        let field = tb.field();
        for a in &t1 {
            for b in &t1 {
                let ab = tb.multiply(a, b);
                let ba: Vec<u32> = tb.multiply(b, a).coords.iter().map(|&x| field.neg(x)).collect();
                prop_assert_eq!(&ab.coords, &ba);
            }
            for b in &t2 {
                prop_assert_eq!(tb.multiply(a, b).coords, tb.multiply(b, a).coords);
            }
        }
    }

    #[test]
    fn resolution_does_not_depend_on_the_lift(seed in any::<u64>(), pick in any::<prop::sample::Index>()) {
        let trims = family_trims();
        let input = &trims[pick.index(trims.len())];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let q = perturbed_q(f(), &input.build_q(), &mut rng);
        let c = build_complex_with_q(input, q).unwrap();
        prop_assert!(c.is_complex());
        let top = input.pfaffians().iter().filter_map(Poly::degree).max().unwrap();
        prop_assert!(c.verify_exactness(3 * top + 3).exact);
        prop_assert_eq!(c.cancelled_betti(), build_complex(input).unwrap().cancelled_betti());
    }
}

#[test]
fn colon_of_the_trimmed_generator_is_proper() {
    for input in family_trims() {
        assert!(input.is_gorenstein_artinian(20));
        assert!(input.k_ideals().colon_in_maximal());
    }
}

#[test]
fn strand_dimensions() {
    assert_eq!((0..5).map(|d| strand_dim(d)).collect::<Vec<_>>(), vec![1, 3, 6, 10, 15]);
}
