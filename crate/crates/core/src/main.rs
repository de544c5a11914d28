fn main() {
    let code = tracecurve::cli::run(std::env::args().collect());
    std::process::exit(code);
}
