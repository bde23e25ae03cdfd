use proptest::prelude::*;
use quotdt_core::partitions::enum_colored;
use quotdt_core::vertex::{chart_contribution, euler_inverse, vertex_character};
use quotdt_core::{ChartWeights, ColoredPlanePartition, EquivParams, Error};

/// Unimodular integer matrices as products of elementary moves.
fn unimodular() -> impl Strategy<Value = [[i64; 3]; 3]> {
    prop::collection::vec((0usize..3, 0usize..3, -2i64..=2, any::<bool>()), 0..5).prop_map(|moves| {
        let mut m = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
        for (i, j, k, flip) in moves {
            if i != j {
                for c in 0..3 {
                    m[i][c] += k * m[j][c];
                }
            }
            if flip {
                m.swap(i, j);
            }
        }
        m
    })
}

fn chart(r: usize) -> impl Strategy<Value = ChartWeights> {
    (unimodular(), prop::collection::vec(prop::array::uniform3(-2i64..=2), r))
        .prop_map(|(t, lines)| ChartWeights::new(t, &lines).unwrap())
}

fn fixed_point(max_n: usize, r: usize) -> impl Strategy<Value = ColoredPlanePartition> {
    (0..=max_n).prop_flat_map(move |n| {
        let pts = enum_colored(n, r);
        (0..pts.len()).prop_map(move |i| pts[i].clone())
    })
}

fn case() -> impl Strategy<Value = (ColoredPlanePartition, ChartWeights)> {
    (1usize..=2).prop_flat_map(|r| (fixed_point(4, r), chart(r)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn vertex_character_is_self_dual_of_vd_zero((pt, chart) in case()) {
        let ch = vertex_character(&pt, &chart).unwrap();
        prop_assert!(ch.poly().constant_term() == 0.into());
        prop_assert!(ch.is_kappa_symmetric(chart.kappa()));
        // the sum of coefficients is the virtual rank, which is zero
        prop_assert!(ch.poly().sum_of_coefficients() == 0.into());
    }

    #[test]
    fn contributions_are_homogeneous_of_degree_zero(
        (pt, chart) in case(),
        s in prop::array::uniform3(-1000i64..=1000),
        v in prop::collection::vec(-1000i64..=1000, 2),
        k in prop::sample::select(vec![-3i64, -1, 2, 5]),
    ) {
        let params = EquivParams::new(s, v[..chart.rank()].to_vec());
        let ch = vertex_character(&pt, &chart).unwrap();
        match euler_inverse(&ch, &params) {
            Ok(x) => prop_assert_eq!(euler_inverse(&ch, &params.scaled(k)).unwrap(), x),
            Err(e) => {
                let zero_weight = matches!(e, Error::ZeroWeight { .. });
                prop_assert!(zero_weight);
            }
        }
    }
}

#[test]
fn every_fixed_point_up_to_four_boxes() {
    let charts = [
        ChartWeights::standard(1),
        ChartWeights::new([[-1, 0, 0], [-1, 1, 0], [-1, 0, 1]], &[[1, 0, 0]]).unwrap(),
    ];
    for chart in &charts {
        for n in 0..=4 {
            for pt in enum_colored(n, 1) {
                let ch = vertex_character(&pt, chart).unwrap();
                assert!(ch.is_kappa_symmetric(chart.kappa()), "{pt}");
            }
        }
    }
    let chart = ChartWeights::new([[1, 0, 0], [0, 1, 0], [0, 0, 1]], &[[0, 0, 0], [1, -1, 0]]).unwrap();
    for n in 0..=4 {
        for pt in enum_colored(n, 2) {
            assert!(vertex_character(&pt, &chart).unwrap().is_kappa_symmetric(chart.kappa()), "{pt}");
        }
    }
}

#[test]
fn chart_sums_are_rational_functions_of_degree_zero() {
    let chart = ChartWeights::standard(1);
    let p = EquivParams::new([3, 17, -101], vec![11]);
    for n in 1..=3 {
        assert_eq!(chart_contribution(&chart, 1, n, &p).unwrap(), chart_contribution(&chart, 1, n, &p.scaled(-4)).unwrap());
    }
}
