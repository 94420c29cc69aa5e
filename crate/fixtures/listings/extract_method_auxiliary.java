private long readLong(int shift) {
    return toLong(buffer, position + shift);
}
