//! Drives the command layer from an INI config without the binary.
//!
//! `cargo run --example run_config -- configs/progressive.ini`

use swanson::cli::{commands, verify, Format, RunConfig};

fn main() -> swanson::error::Result<()> {
    let path = std::env::args().nth(1).unwrap_or_else(|| "configs/progressive.ini".into());
    let cfg = RunConfig::load(path.as_ref())?;
    print!("{}", commands::check(&cfg).text);
    print!("{}", commands::spectrum(&cfg, true)?.render(Format::Csv));
    if !cfg.scatter_k.is_empty() {
        print!("{}", commands::scatter(&cfg, false)?.render(Format::Csv));
    }
    print!("{}", verify::run(&cfg, false)?.render());
    Ok(())
}
