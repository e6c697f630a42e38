use std::sync::Arc;

use bkschubert::branching::{hom_check_diagonal, Branching, Embedding};
use bkschubert::rootdata::{Coweight, RootDatum, Series, Weight};
use proptest::prelude::*;

fn embeddings() -> Vec<Embedding> {
    let a2 = RootDatum::new(Series::A, 2).unwrap();
    let b2 = RootDatum::new(Series::B, 2).unwrap();
    vec![
        Embedding::diagonal(&a2),
        Embedding::diagonal(&b2),
        Embedding::principal_sl2(4).unwrap(),
        Embedding::tensor(3, 1, 2).unwrap(),
        Embedding::odd_orthogonal(4).unwrap(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// `<i*(μ), λ> = <μ, i(λ)>` for arbitrary integral weights and coweights.
    #[test]
    fn restriction_is_adjoint_to_inclusion(e in 0usize..5, seed in prop::collection::vec(-4i64..=4, 16)) {
        let emb = &embeddings()[e];
        let (rs, ra) = (emb.sub().rank(), emb.ambient().rank());
        let mu = Weight(seed[..ra].to_vec());
        let lambda = Coweight(seed[16 - rs..].to_vec());
        let lhs = emb.sub().pair(&lambda, &emb.restrict_weight(&mu).unwrap()).unwrap();
        let rhs = emb.ambient().pair(&emb.include_coweight(&lambda).unwrap(), &mu).unwrap();
        prop_assert_eq!(lhs, rhs);
    }
}

#[test]
fn diagonal_comorphism_is_a_ring_map() {
    for (s, r, lambda) in [(Series::A, 2, vec![1, 1]), (Series::A, 3, vec![0, 1, 0]), (Series::B, 2, vec![1, 0])] {
        let d = RootDatum::new(s, r).unwrap();
        let b = Branching::new(Arc::new(Embedding::diagonal(&d)), Coweight(lambda)).unwrap();
        let report = hom_check_diagonal(&b, None).unwrap();
        assert!(report.passed(), "{s}{r}: {:?}", report.violations);
        assert!(report.pairs_checked > 0);
    }
}
