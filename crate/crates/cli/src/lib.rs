//! The `mrpca` command-line tool: scene synthesis, decomposition with
//! M-RPCA / EM-RPCA / PCP, evaluation against ground truth, and convergence
//! summaries of solver traces. Every writing command leaves a
//! `manifest.txt` that `mrpca replay` turns back into the same outputs.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod convergence;
pub mod decompose;
pub mod eval;
pub mod exit;
pub mod manifest;
pub mod synth;

use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use mrpca_core::data::{load_sequence, Source};
use mrpca_core::{Dims, Matrix};

use crate::manifest::RunManifest;

#[derive(Debug, Parser)]
#[command(name = "mrpca", version, about = "Masked low-rank + sparse video decomposition")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a synthetic clip and its ground truth from a scene file.
    Synth(synth::SynthArgs),
    /// Split a clip into background, mask and (for emrpca) perturbation.
    Decompose(decompose::DecomposeArgs),
    /// Score a mask and/or background against ground truth.
    Eval(eval::EvalArgs),
    /// Summarize a trace.csv written by `decompose`.
    Convergence(convergence::ConvergenceArgs),
    /// Re-run the command recorded in a manifest.
    Replay(ReplayArgs),
}

#[derive(Debug, clap::Args)]
pub struct ReplayArgs {
    /// A manifest.txt written by `synth` or `decompose`.
    pub manifest: PathBuf,
    #[arg(long)]
    pub out: PathBuf,
}

/// Runs one command and returns its exit code. Errors are printed to stderr.
pub fn run(cli: Cli) -> u8 {
    let result = match cli.command {
        Command::Synth(a) => synth::run(&a),
        Command::Decompose(a) => decompose::run(&a),
        Command::Eval(a) => eval::run(&a),
        Command::Convergence(a) => convergence::run(&a),
        Command::Replay(a) => replay(&a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            exit::code_for(&e)
        }
    }
}

fn replay(args: &ReplayArgs) -> Result<u8> {
    let m = RunManifest::read(&args.manifest)?;
    if m.get("tool_version") != Some(manifest::TOOL_VERSION) {
        eprintln!(
            "warning: manifest was written by version {}, this is {}",
            m.get("tool_version").unwrap_or("?"),
            manifest::TOOL_VERSION
        );
    }
    match m.command() {
        Some("synth") => synth::replay(&m, &args.out),
        Some("decompose") => decompose::run(&decompose::DecomposeArgs {
            config: Some(args.manifest.clone()),
            out: args.out.clone(),
            ..Default::default()
        }),
        Some(other) => Err(exit::usage(format!("cannot replay command `{other}`"))),
        None => Err(exit::usage(format!("{} has no `command` entry", args.manifest.display()))),
    }
}

pub(crate) fn load(path: &Path) -> Result<(Matrix, Dims)> {
    load_sequence(&Source::detect(path)).with_context(|| format!("loading {}", path.display()))
}

pub(crate) fn create_dir(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))
}

/// Absolute form of an existing path, for manifests.
pub(crate) fn absolute(path: &Path) -> Result<PathBuf> {
    path.canonicalize().with_context(|| format!("cannot resolve {}", path.display()))
}
