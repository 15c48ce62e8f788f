fn main() {
    let code = nagell::cli::run(std::env::args_os());
    std::process::exit(code);
}
