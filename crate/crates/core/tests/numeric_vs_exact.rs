//! Random connected graphs: the eigensolver against Sturm-isolated roots of
//! the exact characteristic polynomial, plus labeling invariances.

use alpha_spectra::canon::{canonical_form, is_isomorphic};
use alpha_spectra::charpoly::phi;
use alpha_spectra::charpoly::roots::largest_real_root;
use alpha_spectra::graph6;
use alpha_spectra::lemmas::random_connected;
use alpha_spectra::poly::rational;
use alpha_spectra::spectral::{rayleigh_quotient, spectral_radius};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn graph_strategy() -> impl Strategy<Value = (u64, usize, usize)> {
    (any::<u64>(), 2usize..10, 0usize..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn radius_is_largest_root((seed, n, extra) in graph_strategy(), num in 0i64..=8) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected(&mut rng, n, extra);
        let alpha = rational(num, 8);
        let numeric = spectral_radius(&g, &alpha, 1e-12).unwrap();
        let exact = largest_real_root(&phi(&g, &alpha).unwrap()).unwrap();
        prop_assert!((numeric.radius - exact).abs() < 1e-8, "{} vs {}", numeric.radius, exact);
        prop_assert!(numeric.perron.iter().all(|&v| v > 0.0));
        let rq = rayleigh_quotient(&g, &alpha, &numeric.perron).unwrap();
        prop_assert!((rq - numeric.radius).abs() < 1e-8);
    }

    #[test]
    fn relabeling_preserves_everything((seed, n, extra) in graph_strategy()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected(&mut rng, n, extra);
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(&mut rng);
        let h = g.relabel(&perm);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(is_isomorphic(&g, &h));
        let alpha = rational(1, 3);
        prop_assert_eq!(phi(&g, &alpha).unwrap(), phi(&h, &alpha).unwrap());
        prop_assert_eq!(graph6::decode(&graph6::encode(&h)).unwrap(), h);
    }
}
