public UUID execute() {
    return new UUID(readLong(0), readLong(8));
}
