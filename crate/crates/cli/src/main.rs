//! `dwf`: build/validate/sample stencils, compute and convert discrete Wigner
//! functions, validate frames, and render phase-space heatmaps.
//!
//! Exit codes: 0 success/valid, 1 checks failed, 2 usage/parse/dimension
//! errors. All numeric output is printed with 12 significant digits.

mod input;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use dwf_core::io;
use dwf_core::{
    apply_function_map, build_function_map, builtin_stencil, m_ppo_frame, negativity, project,
    sample_valid_stencil, validate_frame, validate_stencil, wig, Dimension, Error, Result,
    StencilKind, ValidityReport, WignerGrid,
};
use input::GridPayload;
use render::{color_layer, overlay_layer, ImageFormat, RenderMode, RenderSpec};

#[derive(Parser)]
#[command(
    name = "dwf",
    version,
    about = "Stencil-based discrete Wigner functions on a d×d phase space"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build and sample stencils
    #[command(subcommand)]
    Stencil(StencilCommand),
    /// Compute and convert discrete Wigner functions
    #[command(subcommand)]
    Wigner(WignerCommand),
    /// Render a stencil or grid file as a heatmap image
    Render(RenderArgs),
    /// Frame-level checks driven by a stencil file
    #[command(subcommand)]
    Frame(FrameCommand),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum KindArg {
    Rs,
    Cgs,
    Dks,
}

impl From<KindArg> for StencilKind {
    fn from(kind: KindArg) -> Self {
        match kind {
            KindArg::Rs => StencilKind::Reduction,
            KindArg::Cgs => StencilKind::CoarseGrain,
            KindArg::Dks => StencilKind::DirichletKernel,
        }
    }
}

#[derive(Subcommand)]
enum StencilCommand {
    /// Write a built-in stencil and print its validity summary
    Builtin {
        /// Stencil family
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Qudit dimension
        #[arg(long)]
        d: usize,
        /// Output stencil file
        #[arg(long)]
        out: PathBuf,
        /// Validity tolerance
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Sample a novel valid stencil deterministically from a seed
    Sample {
        /// Qudit dimension
        #[arg(long)]
        d: usize,
        /// Generator seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output stencil file
        #[arg(long)]
        out: PathBuf,
        /// Validity tolerance
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
}

#[derive(Subcommand)]
enum WignerCommand {
    /// Compute the Wigner function of a state in a stencil's frame
    Compute {
        /// State file (density matrix or pure-state vector)
        state: PathBuf,
        /// Stencil file
        stencil: PathBuf,
        /// Output Wigner-grid file
        #[arg(long)]
        out: PathBuf,
        /// Stencil validity tolerance
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Convert a Wigner grid from one stencil's representation to another's
    Convert {
        /// Input Wigner-grid file
        wigner: PathBuf,
        /// Source stencil file
        from: PathBuf,
        /// Target stencil file
        to: PathBuf,
        /// Output Wigner-grid file
        #[arg(long)]
        out: PathBuf,
        /// Stencil validity tolerance
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
}

#[derive(Parser)]
struct RenderArgs {
    /// Stencil, doubled-grid, or Wigner-grid file
    grid: PathBuf,
    /// Output image file
    #[arg(long)]
    out: PathBuf,
    /// What to draw
    #[arg(long, value_enum, default_value_t = RenderMode::Raw)]
    mode: RenderMode,
    /// Image format
    #[arg(long, value_enum, default_value_t = ImageFormat::Ppm)]
    format: ImageFormat,
    /// Pixels per grid cell
    #[arg(long, default_value_t = 32, value_parser = clap::value_parser!(u32).range(1..))]
    scale: u32,
}

#[derive(Subcommand)]
enum FrameCommand {
    /// Build the stencil's frame, print its report as JSON, exit 0 iff valid
    Validate {
        /// Stencil file
        stencil: PathBuf,
        /// Tolerance for all residuals
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
}

/// 12 significant digits, scientific.
fn sig(x: f64) -> String {
    format!("{x:.11e}")
}

fn print_validity(report: &ValidityReport) {
    let tag = |ok: bool| if ok { "ok" } else { "FAIL" };
    println!(
        "validity: M1 {} M2 {} M3 {}",
        tag(report.m1_ok),
        tag(report.m2_ok),
        tag(report.m3_ok)
    );
    println!(
        "residuals: M1 {} M2 {} M3 {}",
        sig(report.m1_residual),
        sig(report.m2_residual),
        sig(report.m3_residual)
    );
}

fn print_negativity(label: &str, grid: &WignerGrid) {
    match negativity(grid) {
        Ok(value) => println!("{label}: {}", sig(value)),
        Err(_) => println!("{label}: undefined (grid not real within 1e-8)"),
    }
}

fn checks_exit(ok: bool) -> ExitCode {
    if ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    match cli.command {
        Command::Stencil(StencilCommand::Builtin { kind, d, out, tol }) => {
            let d = Dimension::new(d)?;
            let stencil = builtin_stencil(kind.into(), d)?;
            io::write_stencil(&out, &stencil)?;
            println!("wrote stencil '{}' to {}", stencil.label(), out.display());
            let report = validate_stencil(&stencil, tol);
            print_validity(&report);
            Ok(checks_exit(report.all_ok()))
        }
        Command::Stencil(StencilCommand::Sample { d, seed, out, tol }) => {
            let d = Dimension::new(d)?;
            let stencil = sample_valid_stencil(d, seed)?;
            io::write_stencil(&out, &stencil)?;
            println!("wrote stencil '{}' to {}", stencil.label(), out.display());
            let report = validate_stencil(&stencil, tol);
            print_validity(&report);
            Ok(checks_exit(report.all_ok()))
        }
        Command::Wigner(WignerCommand::Compute {
            state,
            stencil,
            out,
            tol,
        }) => {
            let state = input::read_state(&state)?;
            let stencil = io::read_stencil(&stencil)?;
            let report = validate_stencil(&stencil, tol);
            if !report.all_ok() {
                return Err(Error::InvalidStencil {
                    label: stencil.label().to_string(),
                    report,
                });
            }
            let grid = wig(&state, &m_ppo_frame(&stencil))?;
            io::write_wigner(&out, &grid)?;
            let sum = grid.sum();
            if sum.im.abs() > 1e-9 {
                println!("sum: {} (imaginary part {})", sig(sum.re), sig(sum.im));
            } else {
                println!("sum: {}", sig(sum.re));
            }
            print_negativity("negativity", &grid);
            Ok(ExitCode::SUCCESS)
        }
        Command::Wigner(WignerCommand::Convert {
            wigner,
            from,
            to,
            out,
            tol,
        }) => {
            let grid = io::read_wigner(&wigner)?;
            let from_stencil = io::read_stencil(&from)?;
            let to_stencil = io::read_stencil(&to)?;
            let map = build_function_map(&from_stencil, &to_stencil, tol)?;
            let converted = apply_function_map(&map, &grid)?;
            io::write_wigner(&out, &converted)?;
            println!(
                "converted {} -> {}",
                map.source_label(),
                map.target_label()
            );
            print_negativity("negativity before", &grid);
            print_negativity("negativity after", &converted);
            Ok(ExitCode::SUCCESS)
        }
        Command::Render(args) => {
            let spec = RenderSpec {
                mode: args.mode,
                format: args.format,
                scale: args.scale,
            };
            // heatmaps draw the real part of each cell
            let reals = |values: &[num_complex::Complex64]| -> Vec<f64> {
                values.iter().map(|z| z.re).collect()
            };
            let payload = input::read_grid_payload(&args.grid)?;
            let (cells, side) = match (&payload, spec.mode) {
                (GridPayload::Stencil(s), RenderMode::Raw) => {
                    (color_layer(&reals(s.raw().values()), 1.0), s.raw().side())
                }
                (GridPayload::Stencil(s), RenderMode::Projected) => (
                    color_layer(&reals(s.projected().values()), 1.0),
                    s.raw().side(),
                ),
                (GridPayload::Stencil(s), RenderMode::Overlay) => (
                    overlay_layer(&reals(s.raw().values()), &reals(s.projected().values())),
                    s.raw().side(),
                ),
                (GridPayload::Doubled(f), RenderMode::Raw) => {
                    (color_layer(&reals(f.values()), 1.0), f.side())
                }
                (GridPayload::Doubled(f), RenderMode::Projected) => {
                    (color_layer(&reals(project(f).values()), 1.0), f.side())
                }
                (GridPayload::Doubled(_), RenderMode::Overlay) => {
                    return Err(Error::Format(
                        "overlay mode requires a stencil file".into(),
                    ));
                }
                (GridPayload::Wigner(w), RenderMode::Raw) => {
                    (color_layer(&reals(w.values()), 1.0), w.side())
                }
                (GridPayload::Wigner(_), RenderMode::Projected | RenderMode::Overlay) => {
                    return Err(Error::Format(
                        "projected and overlay modes require a doubled-space input".into(),
                    ));
                }
            };
            render::write_image(&args.out, &cells, side, spec)?;
            let pixels = side * spec.scale as usize;
            println!("wrote {pixels}x{pixels} image to {}", args.out.display());
            Ok(ExitCode::SUCCESS)
        }
        Command::Frame(FrameCommand::Validate { stencil, tol }) => {
            let stencil = io::read_stencil(&stencil)?;
            let report = validate_frame(&m_ppo_frame(&stencil), tol);
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(checks_exit(report.frame_ok()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                // failed checks on well-formed input
                Error::InvalidStencil { .. } | Error::SamplerConflict(..) => ExitCode::from(1),
                // everything else is a usage, parse, or dimension problem
                _ => ExitCode::from(2),
            }
        }
    }
}
