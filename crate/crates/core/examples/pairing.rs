//! Pair codes and lattice points.

use cegis_lab::prelude::*;

fn main() {
    for (a, b) in [(0, 0), (0, 2), (1, 7), (3, 4)] {
        let code = pair_encode(a, b).unwrap();
        println!("<{a},{b}> = {code}  decodes to {:?}", pair_decode(code));
    }
    for (x, y) in [(0, 0), (-2, 0), (0, 2), (-1, -1)] {
        let code = point_encode(x, y).unwrap();
        println!("({x},{y}) = {code}");
    }
    println!(
        "first codes: {:?}",
        (0..10).map(pair_decode).collect::<Vec<_>>()
    );
}
