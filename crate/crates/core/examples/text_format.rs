//! Parsing and printing the position text format, including error locations.

use hackenbush::dsl;

pub fn run_example() -> hackenbush::Result<()> {
    let text = "stalk(2) + flower(3; 2 R) + gflower(2; string(BR)) + graph{(g0 a G)(a a B)}";
    let doc = dsl::parse(text)?;
    println!("parsed {} terms, printed back as\n  {}", doc.terms.len(), dsl::print(&doc));
    let p = doc.to_position()?;
    println!("{} edges, {} ground vertices; as one graph:\n  {}", p.edge_count(), p.ground().len(), dsl::print_position(&p));

    for bad in ["stalk(0)", "flower(2; 1 G)", "stalk(1) +\n  sprig(3)", "gflower(1; 1/3)"] {
        match dsl::parse(bad).and_then(|d| d.to_position()) {
            Ok(_) => println!("{bad:?} unexpectedly parsed"),
            Err(e) => println!("{bad:?}: {e}"),
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> hackenbush::Result<()> {
    run_example()
}
