//! Byte-exact output formats. Regenerate with `BLESS=1 cargo test --test golden`.

use std::fs;
use std::path::PathBuf;

use pimenov_core::expr::{print_with, Style};
use pimenov_core::{factor, invert, is_prime, parse, solve_division, to_json};

fn check(name: &str, actual: &str) {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    if std::env::var_os("BLESS").is_some() {
        fs::write(&path, actual).unwrap();
        return;
    }
    let expected = fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()));
    assert_eq!(actual, expected, "golden mismatch for {name}");
}

const ELEMENTS: [(&str, usize); 6] = [
    ("2 + i1 - i2*i3", 3),
    ("-1/3*i1*i2 + 7", 2),
    ("i1*i2 + i1*i3 + 2*i2*i4 + i3*i4", 4),
    ("0", 3),
    ("i4 - i1 + 1/2*i2*i3*i1", 5),
    ("i1*i2 + i3*i4", 4),
];

#[test]
fn text_forms() {
    let mut out = String::new();
    for (text, n) in ELEMENTS {
        let x = parse(text, n).unwrap();
        out += &format!("{text} | {x} | {}\n", print_with(&x, Style::Unicode));
    }
    check("text.txt", &out);
}

#[test]
fn json_forms() {
    let mut out = String::new();
    for (text, n) in ELEMENTS {
        out += &to_json(&parse(text, n).unwrap());
        out.push('\n');
    }
    let f = factor(&parse("i1*i2 + i1*i3 + 2*i2*i4 + i3*i4", 4).unwrap()).unwrap();
    for g in &f.factors {
        out += &to_json(g);
        out.push('\n');
    }
    check("json.txt", &out);
}

#[test]
fn algorithm_outputs() {
    let mut out = String::new();
    let x = parse("2 + i1 - i2*i3", 3).unwrap();
    out += &format!("inverse {x} = {}\n", invert(&x).unwrap());
    let sol = solve_division(&parse("i1", 2).unwrap(), &parse("i1*i2", 2).unwrap()).unwrap();
    out += &format!(
        "divide i1*i2 by i1: {:?} particular {} kernel [{}] rank {}\n",
        sol.status,
        sol.particular.unwrap(),
        sol.kernel_basis.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
        sol.rank
    );
    for (text, n) in [
        ("i1*i2", 4),
        ("i1*i2 + i3*i4", 4),
        ("2*i1*i2 + 3*i1*i3 + 5*i2*i3 + 7*i1*i2*i3", 3),
        ("i1*i2 + i1*i3 + i1*i4 + i2*i3 + i2*i4 + i3*i4", 4),
        ("i1*i2*i3 + i2*i3*i4 + 3*i1*i2*i3*i4", 4),
        ("i1*i2 + i1*i3 + 2*i2*i4 + i3*i4", 4),
    ] {
        let x = parse(text, n).unwrap();
        let f = factor(&x).unwrap();
        out += &format!("factor {x} = {} [{}]\n", f.product_string(), f.field);
    }
    for text in ["i1*i2 + i1*i3 + i2*i4", "i1*i2 + i1*i3 + i2*i4 - i3*i4", "i1*i2 + i1*i3 + i2*i4 + i3*i4"] {
        let v = is_prime(&parse(text, 4).unwrap()).unwrap();
        out += &format!("prime {text}: {} ({})\n", v.verdict, v.reason);
    }
    check("algorithms.txt", &out);
}
