//! Writing an operator to the matrix text format, certifying it through the
//! command-line configuration, and reading the JSON report back.

use coorbit::cli::{config::parse_config_text, run_certify, Config, ReportDocument};

pub fn run_example() -> coorbit::Result<()> {
    let dir = std::env::temp_dir().join(format!("coorbit-example-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("operator.txt");
    coorbit::io::write_operator(&path, &coorbit::random::operator(8, 8, 1))?;

    let text = format!(
        "n=8\nrepresentation1=wh\nrepresentation2=affine\nweight2=dyadic\ns2=0.5\ndirection=p-to-inf\np=2\noperator={}\n",
        path.display()
    );
    let config = Config::from_map(&parse_config_text(&text)?)?;
    let doc = run_certify(&config)?;
    let json = doc.to_json()?;
    println!("{}", json.lines().take(12).collect::<Vec<_>>().join("\n"));

    let back = ReportDocument::from_json(&json)?;
    println!("round trip lossless: {}", back == doc && back.to_json()? == json);
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}

#[allow(dead_code)]
fn main() -> coorbit::Result<()> {
    run_example()
}
