//! Rewrites a catalog file in canonical form: `canonicalize_catalog <in> <out>`.

use hbk_core::catalog::Catalog;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let [_, input, output] = args.as_slice() else {
        eprintln!("usage: canonicalize_catalog <in> <out>");
        std::process::exit(1);
    };
    let text = std::fs::read_to_string(input).expect("read catalog");
    let catalog = Catalog::from_toml(&text).expect("valid catalog");
    std::fs::write(output, catalog.to_toml().expect("serialize")).expect("write catalog");
}
