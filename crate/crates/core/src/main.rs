fn main() {
    let code = specht_h1::cli::run(std::env::args_os());
    std::process::exit(code);
}
