use negcycles::signed_perm::Point;
use negcycles::{Permutation, Sign, SignedPermutation};
use proptest::prelude::*;

fn element(n: usize) -> impl Strategy<Value = SignedPermutation> {
    (
        Just((1..=n as i32).collect::<Vec<_>>()).prop_shuffle(),
        any::<u64>(),
    )
        .prop_map(|(mut window, mask)| {
            for (i, v) in window.iter_mut().enumerate() {
                if mask >> i & 1 == 1 {
                    *v = -*v;
                }
            }
            SignedPermutation::new(window).unwrap()
        })
}

fn triple() -> impl Strategy<Value = (SignedPermutation, SignedPermutation, SignedPermutation)> {
    (1usize..=20).prop_flat_map(|n| (element(n), element(n), element(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn associativity((a, b, c) in triple()) {
        let left = a.compose(&b).unwrap().compose(&c).unwrap();
        let right = a.compose(&b.compose(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identity_and_inverse((a, _, _) in triple()) {
        let e = SignedPermutation::identity(a.rank()).unwrap();
        prop_assert_eq!(&a.compose(&e).unwrap(), &a);
        prop_assert_eq!(&e.compose(&a).unwrap(), &a);
        prop_assert_eq!(&a.compose(&a.inverse()).unwrap(), &e);
        prop_assert_eq!(&a.inverse().compose(&a).unwrap(), &e);
    }

    #[test]
    fn composition_is_action((a, b, _) in triple()) {
        // (ab)(p) = a(b(p)): the right factor acts first
        let ab = a.compose(&b).unwrap();
        for i in 1..=a.rank() {
            for primed in [false, true] {
                let p = Point::new(i, primed);
                prop_assert_eq!(ab.apply(p), a.apply(b.apply(p)));
                prop_assert_eq!(a.apply(p.mirror()), a.apply(p).mirror());
            }
        }
    }

    #[test]
    fn projection_is_a_homomorphism((a, b, _) in triple()) {
        let lhs = a.compose(&b).unwrap().projection();
        let rhs = a.projection().compose(&b.projection()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn d_is_a_subgroup((a, b, _) in triple()) {
        let ab = a.compose(&b).unwrap();
        prop_assert_eq!(ab.in_d(), a.in_d() == b.in_d());
        prop_assert_eq!(a.inverse().in_d(), a.in_d());
    }

    #[test]
    fn decomposition_invariants((a, _, _) in triple()) {
        let d = a.cycle_decomposition();
        let n = a.rank();
        prop_assert_eq!(d.rank(), n);
        prop_assert_eq!(d.orbit_sizes().iter().sum::<usize>(), 2 * n);
        // membership in D is decided by the parity of negative cycles
        prop_assert_eq!(a.in_d(), d.negative_count() % 2 == 0);
        // the sign-product rule agrees with orbit tracing
        let signs = a.sign_vector();
        let negative = signs.entries().iter().filter(|&&s| s == Sign::Minus).count();
        prop_assert_eq!(negative, d.negative_count());
        prop_assert_eq!(signs.len(), a.projection().cycle_count());
    }

    #[test]
    fn conjugation_preserves_cycle_type((a, g, _) in triple()) {
        let conj = g.compose(&a).unwrap().compose(&g.inverse()).unwrap();
        prop_assert_eq!(conj.cycle_decomposition(), a.cycle_decomposition());
    }

    #[test]
    fn text_round_trip((a, _, _) in triple()) {
        let parsed: SignedPermutation = a.to_string().parse().unwrap();
        prop_assert_eq!(parsed, a);
    }

    #[test]
    fn permutation_projection_matches_window((a, _, _) in triple()) {
        let x: Permutation = a.projection();
        for (i, v) in a.window().iter().enumerate() {
            prop_assert_eq!(x.images()[i], v.unsigned_abs() as usize);
        }
    }
}
