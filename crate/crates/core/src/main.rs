fn main() {
    std::process::exit(unmixed::cli::main_with_args(std::env::args_os()));
}
