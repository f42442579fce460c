//! Lists the member cycle-structure triples of an order, one row per row
//! structure; orders up to 7 are confirmed exhaustively.
//!
//! cargo run --release --example member_table -- 6

use autotopism::search::{enumerate_table, format_table};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let n: usize = std::env::args().nth(1).map(|s| s.parse()).transpose()?.unwrap_or(5);
    let entries = enumerate_table(n, n <= 7)?;
    let members = entries.iter().filter(|e| e.status == autotopism::conditions::Status::Member).count();
    println!("order {n}: {} normalized triples, {members} members", entries.len());
    print!("{}", format_table(&entries));
    Ok(())
}
