fn main() {
    std::process::exit(symquad::cli::main_with_args(std::env::args_os()));
}
