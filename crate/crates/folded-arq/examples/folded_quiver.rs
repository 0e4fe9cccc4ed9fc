//! Build the folded AR-quiver of a twisted adapted class and print it in
//! every output format.
//!
//! ```text
//! cargo run --example folded_quiver -- 4 "2 1 3 5"
//! ```

use folded_arq::coxeter::TwistedCoxeter;
use folded_arq::quiver::{folded_from_element, folded_to_json, to_dot, to_text};
use folded_arq::rootsys::Automorphism;
use folded_arq::words::parse_letters;

fn main() -> folded_arq::Result<()> {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(4);
    let body = args.next().map(|s| parse_letters(&s)).transpose()?.unwrap_or_else(|| vec![2, 1, 3, 5]);
    let f = folded_from_element(&TwistedCoxeter::new(Automorphism::d_fold(n), body)?)?;
    print!("{}", to_text(&f, 0));
    println!();
    print!("{}", to_dot(&f, 0));
    println!();
    println!("{}", serde_json::to_string_pretty(&folded_to_json(&f)).expect("serializable"));
    Ok(())
}
