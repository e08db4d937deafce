//! Conversion-map properties: invertibility of the stencil-change maps, their
//! functorial composition, agreement of mapped grids with independently
//! computed targets, the operator-side contract on full bases, and trace
//! preservation on frame images.

mod common;

use common::*;

use dwf_core::{
    apply_function_map, apply_operator_map, build_function_map, builtin_stencil, m_ppo_frame,
    sample_valid_stencil, weyl, wig, Dimension, Operator, Stencil, StencilKind, WignerGrid,
};

const TOL: f64 = 1e-10;

fn stencil_pairs(d: Dimension) -> Vec<(Stencil, Stencil)> {
    let mut pairs = Vec::new();
    if d.is_odd() {
        pairs.push((
            builtin_stencil(StencilKind::Reduction, d).unwrap(),
            builtin_stencil(StencilKind::DirichletKernel, d).unwrap(),
        ));
    } else {
        pairs.push((
            builtin_stencil(StencilKind::CoarseGrain, d).unwrap(),
            sample_valid_stencil(d, 2024).unwrap(),
        ));
    }
    for seed in 0..10u64 {
        pairs.push((
            sample_valid_stencil(d, 2 * seed).unwrap(),
            sample_valid_stencil(d, 2 * seed + 1).unwrap(),
        ));
    }
    pairs
}

#[test]
fn forward_and_backward_maps_invert_each_other() {
    for d in [2usize, 3, 4, 5] {
        let d = dim(d);
        for (first, second) in stencil_pairs(d) {
            let forward = build_function_map(&first, &second, TOL).unwrap();
            let backward = build_function_map(&second, &first, TOL).unwrap();
            let round_trip = backward.compose(&forward).unwrap();
            assert!(
                round_trip.max_abs_diff_from_identity() < 1e-9,
                "{} ↔ {}",
                first.label(),
                second.label()
            );
        }
    }
}

#[test]
fn maps_compose_functorially() {
    for d in [3usize, 4] {
        let d = dim(d);
        let (a, b) = stencil_pairs(d).remove(0);
        let c = sample_valid_stencil(d, 4096).unwrap();
        let a_to_b = build_function_map(&a, &b, TOL).unwrap();
        let b_to_c = build_function_map(&b, &c, TOL).unwrap();
        let a_to_c = build_function_map(&a, &c, TOL).unwrap();
        let composed = b_to_c.compose(&a_to_b).unwrap();
        let side = composed.side();
        let mut worst: f64 = 0.0;
        for r in 0..side {
            for col in 0..side {
                worst = worst.max((composed.entry(r, col) - a_to_c.entry(r, col)).norm());
            }
        }
        assert!(worst < 1e-9, "d = {d}: composition deviates by {worst:.3e}");
    }
}

#[test]
fn mapped_ground_state_grid_matches_the_independent_target() {
    // wig(|0⟩⟨0|) under RS, pushed through the RS→DKS map, equals the grid
    // computed directly in the DKS frame.
    let d = dim(3);
    let rs = builtin_stencil(StencilKind::Reduction, d).unwrap();
    let dks = builtin_stencil(StencilKind::DirichletKernel, d).unwrap();
    let map = build_function_map(&rs, &dks, TOL).unwrap();
    assert!(map.max_abs_diff_from_identity() > 1e-3, "map should not be trivial");

    let ground = Operator::ket_bra(d, 0, 0);
    let source = wig(&ground, &m_ppo_frame(&rs)).unwrap();
    let target = wig(&ground, &m_ppo_frame(&dks)).unwrap();
    let mapped = apply_function_map(&map, &source).unwrap();
    assert!(mapped.max_abs_diff(&target) < 1e-10);
}

#[test]
fn maps_convert_grids_of_arbitrary_operators() {
    for d in [2usize, 3, 4] {
        let d = dim(d);
        let mut rng = rng(2207 + d.get() as u64);
        let (first, second) = stencil_pairs(d).remove(0);
        let map = build_function_map(&first, &second, TOL).unwrap();
        let source_frame = m_ppo_frame(&first);
        let target_frame = m_ppo_frame(&second);
        for _ in 0..10 {
            let op = random_operator(d, &mut rng);
            let mapped = apply_function_map(&map, &wig(&op, &source_frame).unwrap()).unwrap();
            let target = wig(&op, &target_frame).unwrap();
            assert!(mapped.max_abs_diff(&target) < 1e-10);
        }
    }
}

#[test]
fn round_trip_on_frame_images_restores_the_grid() {
    let d = dim(4);
    let mut rng = rng(2309);
    let (first, second) = stencil_pairs(d).remove(0);
    let forward = build_function_map(&first, &second, TOL).unwrap();
    let backward = build_function_map(&second, &first, TOL).unwrap();
    let frame = m_ppo_frame(&first);
    for _ in 0..10 {
        let grid = wig(&random_operator(d, &mut rng), &frame).unwrap();
        let there = apply_function_map(&forward, &grid).unwrap();
        let back = apply_function_map(&backward, &there).unwrap();
        assert!(back.max_abs_diff(&grid) < 1e-9);
    }
}

#[test]
fn operator_maps_satisfy_the_reconstruction_contract() {
    // For every grid W: mapping weyl(W, F1) lands on weyl(W, F2). A full
    // basis of delta grids covers all W by linearity, plus random grids.
    for d in [2usize, 3] {
        let d = dim(d);
        let (first, second) = stencil_pairs(d).remove(0);
        let first_frame = m_ppo_frame(&first);
        let second_frame = m_ppo_frame(&second);
        for a1 in 0..d.get() {
            for a2 in 0..d.get() {
                let mut delta = WignerGrid::zeros(d);
                delta.set(a1, a2, num_complex::Complex64::new(1.0, 0.0));
                let source_op = weyl(&delta, &first_frame).unwrap();
                let mapped = apply_operator_map(&first, &second, &source_op, TOL).unwrap();
                let target_op = weyl(&delta, &second_frame).unwrap();
                assert!(mapped.max_abs_diff(&target_op) < 1e-10);
            }
        }

        let mut rng = rng(2411 + d.get() as u64);
        let grid = WignerGrid::from_fn(d, |_, _| random_complex(&mut rng));
        let mapped = apply_operator_map(
            &first,
            &second,
            &weyl(&grid, &first_frame).unwrap(),
            TOL,
        )
        .unwrap();
        assert!(mapped.max_abs_diff(&weyl(&grid, &second_frame).unwrap()) < 1e-10);
    }
}

#[test]
fn one_grid_three_frames_are_pairwise_linked() {
    // A fixed grid W reconstructed in three valid frames gives three
    // operators, pairwise related by the operator-side maps.
    let d = dim(3);
    let stencils = [
        builtin_stencil(StencilKind::Reduction, d).unwrap(),
        builtin_stencil(StencilKind::DirichletKernel, d).unwrap(),
        sample_valid_stencil(d, 77).unwrap(),
    ];
    let mut rng = rng(2503);
    let grid = WignerGrid::from_fn(d, |_, _| random_complex(&mut rng));
    let operators: Vec<Operator> = stencils
        .iter()
        .map(|s| weyl(&grid, &m_ppo_frame(s)).unwrap())
        .collect();
    for i in 0..3 {
        for j in 0..3 {
            let mapped =
                apply_operator_map(&stencils[i], &stencils[j], &operators[i], TOL).unwrap();
            assert!(mapped.max_abs_diff(&operators[j]) < 1e-10);
        }
    }
}

#[test]
fn maps_preserve_grid_sums_on_frame_images() {
    // Both sums equal Tr O for grids in the image of the source transform.
    let d = dim(3);
    let mut rng = rng(2609);
    let (first, second) = stencil_pairs(d).remove(0);
    let map = build_function_map(&first, &second, TOL).unwrap();
    let frame = m_ppo_frame(&first);
    for _ in 0..10 {
        let op = random_operator(d, &mut rng);
        let grid = wig(&op, &frame).unwrap();
        let mapped = apply_function_map(&map, &grid).unwrap();
        assert!((mapped.sum() - grid.sum()).norm() < 1e-10);
    }
}
