fn main() {
    std::process::exit(partmorse::cli::main_with_args(std::env::args_os()));
}
