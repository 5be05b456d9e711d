mod common;

use std::fs;

use mrpca_core::data::pgm::{self, Frame};
use mrpca_core::data::synth::{generate_scene, SceneSpec};
use mrpca_core::data::{load_sequence, read_raw, save_volume, write_frames, write_raw, Source};
use mrpca_core::{Dims, Error, Matrix};
use proptest::prelude::*;

#[test]
fn every_bundled_scene_parses_and_generates() {
    for text in [common::STATIC, common::SMALL, common::DYNAMIC, common::SPARSE,
        include_str!("../../../scenes/noisy.scene"), include_str!("../../../scenes/graded.scene")] {
        let spec = SceneSpec::parse(text).unwrap();
        let sc = generate_scene(&spec).unwrap();
        assert!(sc.x.iter().all(|v| (0.0..=1.0).contains(v)));
        assert_eq!(SceneSpec::parse(&spec.to_text()).unwrap(), spec);
    }
}

#[test]
fn noisy_scene_hits_requested_snr() {
    let sc = common::scene(include_str!("../../../scenes/noisy.scene"));
    let snr = sc.realized_snr_db();
    assert!((7.6..=7.8).contains(&snr), "{snr}");
}

#[test]
fn empty_foreground_gives_empty_truth() {
    let sc = common::scene("dims = 6 5 4\nbackground = 0.2\nseed = 2\n");
    assert_eq!(sc.w_true, Matrix::zeros(30, 4));
    assert_eq!(sc.x, sc.l_true);
}

#[test]
fn same_seed_same_bytes() {
    let a = common::scene(common::DYNAMIC);
    let b = common::scene(common::DYNAMIC);
    assert_eq!(a, b);
    let dir = tempfile::tempdir().unwrap();
    write_raw(&dir.path().join("a.raw"), &a.x, a.dims).unwrap();
    write_raw(&dir.path().join("b.raw"), &b.x, b.dims).unwrap();
    assert_eq!(fs::read(dir.path().join("a.raw")).unwrap(), fs::read(dir.path().join("b.raw")).unwrap());
}

#[test]
fn overlay_model_holds_on_clean_scene() {
    let sc = common::scene(common::STATIC);
    let rebuilt = sc.w_true.zip_map(&sc.l_true, |w, l| (1.0 - w) * l) + sc.w_true.component_mul(&sc.s_true);
    assert!(common::max_diff(&rebuilt, &sc.x) < 1e-15);
}

#[test]
fn salt_pepper_stays_off_the_foreground() {
    let sc = common::scene(common::DYNAMIC);
    let hits = sc.e_true.iter().filter(|v| **v != 0.0).count() as f64;
    let background = sc.w_true.iter().filter(|v| **v == 0.0).count() as f64;
    assert!((hits / background - 0.05).abs() < 0.01);
    assert!(sc.e_true.iter().zip(sc.w_true.iter()).all(|(e, w)| *e == 0.0 || *w == 0.0));
}

#[test]
fn infeasible_scenes_are_rejected() {
    for text in [
        "dims = 4 4 1\nbackground = 0.1\n",
        "dims = 4 4 4\nbackground = 0.4 0.3\n",
        "dims = 4 4 4\nlevel = 0.1\nbackground = 0.2\n",
        "dims = 4 4 4\nbackground = 0.1\nshape = rect 5 1 start 0 0 velocity 0 0 intensity 1\n",
    ] {
        let spec = SceneSpec::parse(text);
        assert!(spec.is_err(), "{text}");
    }
}

#[test]
fn frames_round_trip_through_pgm() {
    let dir = tempfile::tempdir().unwrap();
    let sc = common::scene(common::SMALL);
    write_frames(dir.path(), &sc.x, sc.dims).unwrap();
    let (x, dims) = load_sequence(&Source::detect(dir.path())).unwrap();
    assert_eq!(dims, sc.dims);
    assert!(common::max_diff(&x, &sc.x) <= 0.5 / 255.0 + 1e-12);
}

#[test]
fn save_volume_writes_all_forms() {
    let dir = tempfile::tempdir().unwrap();
    let sc = common::scene(common::SMALL);
    save_volume(dir.path(), "X", &sc.x, sc.dims).unwrap();
    assert_eq!(read_raw(&dir.path().join("X.raw")).unwrap(), (sc.x.clone(), sc.dims));
    assert_eq!(fs::read_dir(dir.path().join("X")).unwrap().count(), sc.dims.k);
    let side = fs::read_to_string(dir.path().join("X.txt")).unwrap();
    assert!(side.contains("m = 16\nn = 16\nk = 20\n"));
}

#[test]
fn loader_errors() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nope.raw");
    assert!(matches!(load_sequence(&Source::detect(&missing)), Err(Error::Unreadable { .. })));

    let frames = dir.path().join("frames");
    fs::create_dir(&frames).unwrap();
    let f = |rows, cols| Frame { rows, cols, pixels: vec![0; rows * cols] };
    pgm::write(&frames.join("a.pgm"), &f(2, 3)).unwrap();
    assert!(matches!(load_sequence(&Source::detect(&frames)), Err(Error::Malformed { .. })));
    pgm::write(&frames.join("b.pgm"), &f(3, 2)).unwrap();
    assert!(matches!(load_sequence(&Source::detect(&frames)), Err(Error::DimensionMismatch(_))));

    let deep = dir.path().join("deep");
    fs::create_dir(&deep).unwrap();
    for name in ["a.pgm", "b.pgm"] {
        let mut bytes = b"P5 1 1 65535\n".to_vec();
        bytes.extend_from_slice(&[0, 0]);
        fs::write(deep.join(name), bytes).unwrap();
    }
    assert!(matches!(load_sequence(&Source::detect(&deep)), Err(Error::UnsupportedDepth { maxval: 65535, .. })));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn raw_round_trip(m in 1usize..5, n in 1usize..5, k in 1usize..5, seed in 0u64..1000) {
        let dims = Dims::new(m, n, k).unwrap();
        let x = common::uniform(m * n, k, seed).add_scalar(-0.3) * 7.0;
        let dir = tempfile::tempdir().unwrap();
        let p = dir.path().join("v.raw");
        write_raw(&p, &x, dims).unwrap();
        prop_assert_eq!(read_raw(&p).unwrap(), (x, dims));
    }

    #[test]
    fn requested_snr_is_realized(snr in 5.0f64..30.0, seed in 0u64..1000) {
        let text = format!("dims = 8 8 6\nbackground = 0.2\nshape = rect 2 2 start 1 1 velocity 1 0 intensity 0.9\nsnr_db = {snr}\nseed = {seed}\n");
        let sc = common::scene(&text);
        prop_assert!((sc.realized_snr_db() - snr).abs() < 0.1);
    }
}
