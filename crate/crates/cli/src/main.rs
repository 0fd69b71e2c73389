use std::io::{stderr, stdout};

fn main() {
    let argv: Vec<String> = std::env::args().collect();
    let code = spectral_moore::run(&argv, &mut stdout().lock(), &mut stderr().lock());
    std::process::exit(code);
}
