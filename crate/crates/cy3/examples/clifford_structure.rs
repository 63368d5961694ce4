//! Clifford structure of the symmetric-case 3-Calabi-Yau algebras: their
//! relations take the shape yz+zy = a·x², zx+xz = b·y², xy+yx = c·z² with
//! abc ≠ −1, and the squares of the generators are central.
//!
//! Run with: `cargo run --example clifford_structure`

use cy3::classify::verify_clifford;
use cy3::exactpoly::LinMap3;
use cy3::rat::{format_rat, int, rat};
use cy3::tensor3::TensorN;

fn main() -> cy3::Result<()> {
    // the triangle, conic+chord and nodal rows, written as tensors
    let rows: Vec<(&str, TensorN)> = vec![
        (
            "xyz + zyx",
            TensorN::word(&[0, 1, 2]).add(&TensorN::word(&[2, 1, 0])),
        ),
        (
            "xyz + zyx + x^3/3",
            TensorN::word(&[0, 1, 2])
                .add(&TensorN::word(&[2, 1, 0]))
                .add(&TensorN::word(&[0, 0, 0]).scale(&rat(1, 3))),
        ),
        (
            "xyz + zyx + (x^3+y^3)/3",
            TensorN::word(&[0, 1, 2])
                .add(&TensorN::word(&[2, 1, 0]))
                .add(&TensorN::word(&[0, 0, 0]).scale(&rat(1, 3)))
                .add(&TensorN::word(&[1, 1, 1]).scale(&rat(1, 3))),
        ),
        (
            "beta-family at beta = 2",
            cy3::tensor3::hat(
                &cy3::corpus::xyz()
                    .scale(&int(2))
                    .add(&cy3::corpus::fermat().scale(&rat(2, 3))),
            ),
        ),
    ];
    for (name, w) in rows {
        let data = verify_clifford(&w, &LinMap3::identity())?;
        println!("w = {name}");
        println!(
            "  (a, b, c) = ({}, {}, {}), abc = {}",
            format_rat(&data.a),
            format_rat(&data.b),
            format_rat(&data.c),
            format_rat(&(&data.a * &data.b * &data.c))
        );
        for rel in &data.relations {
            println!("    relation: {rel} = 0");
        }
        println!("  x^2, y^2, z^2 central: verified\n");
    }
    Ok(())
}
