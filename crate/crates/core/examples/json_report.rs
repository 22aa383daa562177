//! A bounds report in the JSON layout of schema/report.schema.json.

use chebotarev::cli::{run, Command, RunOptions};

fn main() -> chebotarev::Result<()> {
    let report = run(
        &Command::Bounds,
        Some(&"alternating 4".parse()?),
        &RunOptions::default(),
    )?;
    println!("{}", report.to_json());
    Ok(())
}
