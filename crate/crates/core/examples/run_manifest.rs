//! Running a manifest from code, as the `dwtqft run` command does.

use dwtqft::cli::{parse_manifest, render, run_manifest, Format, Resolved};

const MANIFEST: &str = r#"{
  "schema": "dwtqft/1",
  "groups": { "s3": { "symmetric": 3 } },
  "manifolds": { "torus": { "builtin": "torus" } },
  "theories": { "u": { "kind": "untwisted", "group": "s3" } },
  "jobs": [
    { "type": "closed", "id": "torus", "theory": "u", "manifold": "torus" },
    { "type": "table7", "id": "table7" }
  ]
}"#;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let manifest = parse_manifest(MANIFEST)?;
    let resolved = Resolved::new(&manifest)?;
    let report = run_manifest(&resolved, 2, 0)?;
    print!("{}", render(&report, Format::Table));
    std::process::exit(report.exit_code());
}
