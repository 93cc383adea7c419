//! Prints the catalog as a markdown reference.
//!
//!     cargo run --example reference > catalog.md

fn main() {
    print!("{}", stieltjes::catalog::reference_document());
}
