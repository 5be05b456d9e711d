use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use mrpca_core::data::save_volume;
use mrpca_core::data::synth::{generate_scene, SceneSpec};

use crate::exit::{self, usage};
use crate::manifest::RunManifest;

const SCENE_PREFIX: &str = "scene.";

/// Volumes written by `synth`, each as `<name>.raw`, `<name>/` frames and a
/// `<name>.txt` sidecar.
pub const OUTPUTS: [&str; 6] = ["X", "X_clean", "L_true", "W_true", "S_true", "E_true"];

#[derive(Debug, clap::Args)]
pub struct SynthArgs {
    /// Scene file (`dims`, `background`, `shape`, `salt_pepper`, `snr_db`, `seed`, ...).
    pub scene: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
}

pub fn run(args: &SynthArgs) -> Result<u8> {
    let text = std::fs::read_to_string(&args.scene)
        .with_context(|| format!("cannot read scene {}", args.scene.display()))?;
    let spec = SceneSpec::parse(&text).map_err(|e| usage(format!("{}: {e}", args.scene.display())))?;
    let source = crate::absolute(&args.scene)?;
    generate(&spec, Some(&source), &args.out)
}

pub fn replay(m: &RunManifest, out: &Path) -> Result<u8> {
    let mut text = String::new();
    for (k, v) in &m.entries {
        if let Some(key) = k.strip_prefix(SCENE_PREFIX) {
            text.push_str(&format!("{key} = {v}\n"));
        }
    }
    if text.is_empty() {
        return Err(usage("manifest has no scene entries"));
    }
    let spec = SceneSpec::parse(&text).map_err(|e| usage(format!("manifest scene: {e}")))?;
    let source = m.get("scene_file").map(PathBuf::from);
    generate(&spec, source.as_deref(), out)
}

fn generate(spec: &SceneSpec, source: Option<&Path>, out: &Path) -> Result<u8> {
    let scene = generate_scene(spec)?;
    crate::create_dir(out)?;
    let d = scene.dims;
    for (name, vol) in OUTPUTS.iter().zip([
        &scene.x,
        &scene.x_clean,
        &scene.l_true,
        &scene.w_true,
        &scene.s_true,
        &scene.e_true,
    ]) {
        save_volume(out, name, vol, d)?;
    }
    let spec_text = spec.to_text();
    let scene_path = out.join("scene.txt");
    std::fs::write(&scene_path, &spec_text).with_context(|| format!("cannot write {}", scene_path.display()))?;

    let mut m = RunManifest::new("synth");
    if let Some(src) = source {
        m.push("scene_file", src.display());
    }
    m.push("dims", format!("{} {} {}", d.m, d.n, d.k));
    m.push_f64("realized_snr_db", scene.realized_snr_db());
    for line in spec_text.lines() {
        if let Some((k, v)) = line.split_once('=') {
            m.push(&format!("{SCENE_PREFIX}{}", k.trim()), v.trim());
        }
    }
    let outputs: Vec<String> = OUTPUTS.iter().map(|n| format!("{n}.raw")).collect();
    m.push("outputs", format!("{} scene.txt", outputs.join(" ")));
    m.write(out)?;

    println!(
        "synth: {}x{}x{} clip, {} foreground pixels, snr {:.2} dB -> {}",
        d.m,
        d.n,
        d.k,
        scene.w_true.iter().filter(|v| **v > 0.0).count(),
        scene.realized_snr_db(),
        out.display()
    );
    Ok(exit::SUCCESS)
}
