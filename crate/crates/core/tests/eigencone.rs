use bkschubert::eigencone::*;
use num_rational::Ratio;

fn ratios(v: &[i64]) -> Vec<Ratio<i64>> {
    v.iter().map(|&x| Ratio::from_integer(x)).collect()
}

#[test]
fn a1_cone_matches_oracle_up_to_eight() {
    let cone = enumerate_inequalities(diagonal_a(1).unwrap()).unwrap();
    for a in 0..=8 {
        for b in 0..=8 {
            for c in 0..=8 {
                let inside = cone_contains(&cone, &ratios(&[a]), &ratios(&[b, c])).unwrap().inside;
                assert_eq!(inside, diag_membership_oracle(&[a], &[b], &[c]), "({a}; {b}, {c})");
            }
        }
    }
}

#[test]
fn a2_cone_matches_oracle_up_to_six() {
    let cone = enumerate_inequalities(diagonal_a(2).unwrap()).unwrap();
    assert!(cone.verify_certificates().unwrap().is_empty());
    let mut mismatches = Vec::new();
    for code in 0..7usize.pow(6) {
        let mut x = [0i64; 6];
        let mut c = code;
        for slot in x.iter_mut() {
            *slot = (c % 7) as i64;
            c /= 7;
        }
        let inside = cone_contains(&cone, &ratios(&x[..2]), &ratios(&x[2..])).unwrap().inside;
        if inside != diag_membership_oracle(&x[..2], &x[2..4], &x[4..]) {
            mismatches.push(x);
        }
    }
    assert!(mismatches.is_empty(), "{} mismatches, first {:?}", mismatches.len(), mismatches.first());
}

#[test]
fn every_inequality_is_essential() {
    for r in 1..=2 {
        let cone = enumerate_inequalities(diagonal_a(r).unwrap()).unwrap();
        let verdicts = irredundancy_check(&cone);
        assert_eq!(verdicts.len(), cone.len());
        assert!(verdicts.iter().all(|v| matches!(v, Essential::Yes(_))), "rank {r}: {verdicts:?}");
    }
}
