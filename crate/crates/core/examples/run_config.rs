//! Driving a run from a TOML configuration, as the command-line tool does.

use cegis_lab::cli::{cmd_run, RunConfig};

fn main() -> cegis_lab::Result<()> {
    let dir = std::env::temp_dir().join("cegis-lab-example");
    let config = RunConfig::from_toml(&format!(
        r#"
family = "rectangle"
target = "-2,3,0,1"
engine = "simulated-mincegis"
schedule = "padded-seeded"
strategy = "seeded-random"
seed = 7
budget = 6000
out = "{}"
"#,
        dir.display()
    ))?;
    print!("{}", config.to_toml());
    let code = cmd_run(&config)?;
    println!("exit code {code}; log in {}", dir.display());
    Ok(())
}
