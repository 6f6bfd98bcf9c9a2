//! Parsing, canonicalizing and re-emitting algebra files.

use reslat::{canon::hex, canonical_form, canonicalize, emit, parse_algebra};

const SWAPPED: &str = "\
# the four-element Boolean algebra with its atoms listed last
algebra b4-relabelled
kind semiring
size 4
zero 0
one 1
op add
0 1 2 3
1 1 1 1
2 1 2 1
3 1 1 3
op mul
0 0 0 0
0 1 2 3
0 2 2 0
0 3 0 3
end
";

fn main() {
    let alg = parse_algebra(SWAPPED).unwrap();
    println!("canonical bytes: {}", hex(&canonicalize(&alg)));
    print!("{}", emit(&canonical_form(&alg)));

    let broken = SWAPPED.replace("0 2 2 0", "0 2 9 0");
    println!("{}", parse_algebra(&broken).unwrap_err());
}
