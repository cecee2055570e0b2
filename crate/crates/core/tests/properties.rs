mod common;

use common::oracle::{self, close, OracleKernel};
use lisa_kit::analysis::{Analysis, Dataset};
use lisa_kit::global::{global_geary, global_moran, moran_geary_identity};
use lisa_kit::lisa::{gc3_from_mi3, gc3_population_form};
use lisa_kit::matrices::{build_contiguity, normalize_global, normalize_row, DistanceMatrix, Kernel};
use lisa_kit::variables::{transform, AttributeVector};
use lisa_kit::verification::{identity_suite, random_instance, refutation_audit, Verdict};
use proptest::prelude::*;

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("p{i}")).collect()
}

fn arb_instance() -> impl Strategy<Value = (Vec<Vec<f64>>, Vec<f64>)> {
    (3usize..=12).prop_flat_map(|n| {
        (
            prop::collection::vec(1.0f64..100.0, n * (n - 1) / 2),
            prop::collection::vec(1.0f64..1000.0, n),
        )
            .prop_map(move |(upper, x)| {
                let mut d = vec![vec![0.0; n]; n];
                let mut k = 0;
                for i in 0..n {
                    for j in (i + 1)..n {
                        d[i][j] = upper[k];
                        d[j][i] = upper[k];
                        k += 1;
                    }
                }
                (d, x)
            })
    })
}

fn arb_kernel() -> impl Strategy<Value = Kernel> {
    prop_oneof![Just(Kernel::InverseDistance), (0.5f64..3.0).prop_map(Kernel::Power)]
}

fn dataset(d: &[Vec<f64>], x: &[f64], kernel: Kernel) -> Dataset {
    let n = x.len();
    Dataset::new(
        "prop",
        DistanceMatrix::new(labels(n), d.to_vec()).unwrap(),
        AttributeVector::new(labels(n), x.to_vec()).unwrap(),
        kernel,
    )
    .unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn contiguity_symmetric_zero_diagonal((d, _) in arb_instance(), kernel in arb_kernel()) {
        let n = d.len();
        let v = build_contiguity(&DistanceMatrix::new(labels(n), d).unwrap(), kernel).unwrap();
        for i in 0..n {
            prop_assert_eq!(v.get(i, i), 0.0);
            for j in 0..n {
                prop_assert_eq!(v.get(i, j), v.get(j, i));
            }
        }
        let row_total: f64 = v.row_sums().iter().sum();
        prop_assert!(close(row_total, v.total(), 1e-12, 0.0));

        let w = normalize_global(&v);
        prop_assert!(w.is_symmetric(1e-12));
        prop_assert!(close(w.total(), 1.0, 1e-12, 1.0));

        let wr = normalize_row(&v).unwrap();
        for i in 0..n {
            prop_assert!(close(wr.row(i).iter().sum::<f64>(), 1.0, 1e-12, 1.0));
        }
        prop_assert!(close(wr.total(), n as f64, 1e-9, 0.0));
    }

    #[test]
    fn inverse_weights_are_scale_free((d, _) in arb_instance(), c in 0.01f64..100.0) {
        let n = d.len();
        let dm = DistanceMatrix::new(labels(n), d).unwrap();
        let w1 = normalize_global(&build_contiguity(&dm, Kernel::InverseDistance).unwrap());
        let w2 = normalize_global(&build_contiguity(&dm.scaled(c).unwrap(), Kernel::InverseDistance).unwrap());
        for i in 0..n {
            for j in 0..n {
                prop_assert!(close(w1.get(i, j), w2.get(i, j), 1e-12, 0.0));
            }
        }
    }

    #[test]
    fn transform_invariances((_, x) in arb_instance(), a in 0.1f64..10.0, b in -500.0f64..500.0) {
        let n = x.len();
        let base = AttributeVector::new(labels(n), x).unwrap();
        let t = transform(&base).unwrap();
        let shifted = transform(&base.affine(1.0, b)).unwrap();
        let scaled = transform(&base.affine(a, 0.0)).unwrap();
        let nf = n as f64;
        prop_assert!(close(t.s2 / t.sigma2, nf / (nf - 1.0), 1e-12, 0.0));
        let ysum: f64 = t.y.iter().sum();
        let xabs: f64 = base.values().iter().map(|v| v.abs()).sum();
        prop_assert!(ysum.abs() <= 1e-9 * xabs);
        for i in 0..n {
            let zs_expected = t.z[i] * ((nf - 1.0) / nf).sqrt();
            prop_assert!(close(t.zs[i], zs_expected, 1e-12, 0.0));
            prop_assert!(close(shifted.y[i], t.y[i], 1e-9, t.sigma()));
            prop_assert!(close(shifted.z[i], t.z[i], 1e-9, 1.0));
            prop_assert!(close(shifted.zs[i], t.zs[i], 1e-9, 1.0));
            prop_assert!(close(scaled.y[i], a * t.y[i], 1e-9, t.sigma()));
            prop_assert!(close(scaled.z[i], t.z[i], 1e-9, 1.0));
            prop_assert!(close(scaled.zs[i], t.zs[i], 1e-9, 1.0));
        }
        prop_assert!(close(scaled.sigma2, a * a * t.sigma2, 1e-12, 0.0));
        prop_assert!(close(scaled.s2, a * a * t.s2, 1e-12, 0.0));
    }

    #[test]
    fn global_statistics_identity((d, x) in arb_instance(), kernel in arb_kernel()) {
        let a = Analysis::run(&dataset(&d, &x, kernel)).unwrap();
        let (lhs, rhs) = moran_geary_identity(&a.global_weights, &a.transforms).unwrap();
        prop_assert!((lhs - rhs).abs() <= 1e-9 * lhs.abs().max(1.0));
        prop_assert!(a.globals.geary_c >= 0.0);
        prop_assert_eq!(a.globals.expected_i, 1.0 / (1.0 - x.len() as f64));
    }

    #[test]
    fn lisa_sums_and_ratios((d, x) in arb_instance(), kernel in arb_kernel()) {
        let a = Analysis::run(&dataset(&d, &x, kernel)).unwrap();
        let lt = &a.lisa;
        let s3: f64 = lt.mi3.iter().sum();
        let c3: f64 = lt.gc3.iter().sum();
        prop_assert!(close(s3, a.globals.moran_i, 1e-12, 0.0));
        prop_assert!(close(c3, a.globals.geary_c, 1e-12, 0.0));
        prop_assert!(close(lt.ratio13, a.transforms.sigma2 * a.v0(), 1e-15, 0.0));
        prop_assert!(close(lt.gratio13, 2.0 * a.transforms.s2 * a.v0(), 1e-15, 0.0));
        let via_moran = gc3_from_mi3(&a.global_weights, &a.transforms, &lt.mi3).unwrap();
        let via_z = gc3_population_form(&a.global_weights, &a.transforms).unwrap();
        for i in 0..lt.len() {
            prop_assert!(close(lt.mi1[i], lt.ratio13 * lt.mi3[i], 1e-9, 0.0));
            prop_assert!(close(lt.gc1[i], lt.gratio13 * lt.gc3[i], 1e-9, 0.0));
            prop_assert!(close(lt.mi1[i] * lt.gc2[i], lt.gc1[i] * lt.mi2[i], 1e-9, 0.0));
            prop_assert!(close(lt.mi1[i], lt.ratio12[i] * lt.mi2[i], 1e-9, 0.0));
            prop_assert!(close(lt.gc1[i], lt.ratio12[i] * lt.gc2[i], 1e-9, 0.0));
            prop_assert!(close(via_moran[i], lt.gc3[i], 1e-9, 0.0));
            prop_assert!(close(via_z[i], lt.gc3[i], 1e-9, 0.0));
            prop_assert!(lt.gc1[i] >= 0.0 && lt.gc2[i] >= 0.0 && lt.gc3[i] >= 0.0);
        }
        let summed: f64 = via_moran.iter().sum();
        let (lhs, _) = moran_geary_identity(&a.global_weights, &a.transforms).unwrap();
        prop_assert!(close(summed, lhs, 1e-9, 0.0));
    }

    #[test]
    fn reports_hold_and_match_oracle((d, x) in arb_instance(), kernel in arb_kernel()) {
        let ds = dataset(&d, &x, kernel);
        let a = Analysis::run(&ds).unwrap();
        let ids = identity_suite(&a).unwrap();
        prop_assert!(ids.identities_hold(), "{}", ids.to_text(8));
        let audit = refutation_audit(&a).unwrap();
        for id in ["gc2_sum_row_coefficient", "mi2_sum_weight_ratio", "coefficient_relation"] {
            prop_assert_eq!(audit.check(id).unwrap().verdict, Verdict::IdentityHolds);
        }

        let ok = match kernel {
            Kernel::Power(b) => OracleKernel::Power(b),
            _ => OracleKernel::Inverse,
        };
        let o = oracle::evaluate(&d, &x, ok);
        let lt = &a.lisa;
        prop_assert!(close(o.moran_i, a.globals.moran_i, 1e-10, 0.0));
        prop_assert!(close(o.geary_c, a.globals.geary_c, 1e-10, 0.0));
        for i in 0..x.len() {
            prop_assert!(close(o.mi1[i], lt.mi1[i], 1e-10, 0.0));
            prop_assert!(close(o.mi2[i], lt.mi2[i], 1e-10, 0.0));
            prop_assert!(close(o.mi3[i], lt.mi3[i], 1e-10, 0.0));
            prop_assert!(close(o.gc1[i], lt.gc1[i], 1e-10, 0.0));
            prop_assert!(close(o.gc2[i], lt.gc2[i], 1e-10, 0.0));
            prop_assert!(close(o.gc3[i], lt.gc3[i], 1e-10, 0.0));
        }
    }
}

#[test]
fn global_statistics_are_affine_invariant() {
    let ds = random_instance(9, 3).unwrap();
    let base = Analysis::run(&ds).unwrap();
    for (a, b) in [(0.5, -100.0), (3.0, 250.0), (1e-3, 1e6)] {
        let moved = Analysis::run(&ds.clone().with_values(ds.values.affine(a, b)).unwrap()).unwrap();
        let i = global_moran(&moved.global_weights, &moved.transforms).unwrap();
        let c = global_geary(&moved.global_weights, &moved.transforms).unwrap();
        assert!(close(i, base.globals.moran_i, 1e-9, 0.0));
        assert!(close(c, base.globals.geary_c, 1e-9, 0.0));
    }
}

/// The claimed `sum(MI2) = n I` fails on essentially every generic instance.
#[test]
fn row_normalized_sum_claim_fails_generically() {
    let total = 200;
    let mut failures = 0;
    for seed in 0..total {
        let n = 3 + (seed as usize % 28);
        let a = Analysis::run(&random_instance(n, seed).unwrap()).unwrap();
        let sum_mi2: f64 = a.lisa.mi2.iter().sum();
        if (sum_mi2 - n as f64 * a.globals.moran_i).abs() > 1e-6 {
            failures += 1;
        }
    }
    println!("sum(MI2) != nI on {failures}/{total} random instances");
    assert!(failures as f64 >= 0.95 * total as f64);
}

/// With two units row and global normalization differ only by a factor of 2,
/// so the claimed relation holds exactly.
#[test]
fn two_units_are_the_degenerate_case() {
    let l = labels(2);
    let ds = Dataset::new(
        "pair",
        DistanceMatrix::new(l.clone(), vec![vec![0.0, 3.0], vec![3.0, 0.0]]).unwrap(),
        AttributeVector::new(l, vec![2.0, 7.0]).unwrap(),
        Kernel::InverseDistance,
    )
    .unwrap();
    let audit = lisa_kit::verification::run_refutation_audit(&ds).unwrap();
    assert_eq!(audit.check("mi2_sum_n_times_i").unwrap().verdict, Verdict::Unexpected);
    assert!(audit.check("mi2_sum_n_times_i").unwrap().abs_gap < 1e-12);
}
