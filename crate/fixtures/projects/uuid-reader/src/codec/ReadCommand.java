package codec;

import java.util.UUID;

/** Reads a UUID stored as two big-endian longs. */
public class ReadCommand {
    private final byte[] buffer;
    private final int position;

    public ReadCommand(byte[] buffer, int position) {
        this.buffer = buffer;
        this.position = position;
    }

    static long toLong(byte[] bytes, int start) {
        long value = 0;
        for (int i = start; i < start + 8; i++) {
            value = (value << 8) | (bytes[i] & 0xff);
        }
        return value;
    }

    public UUID execute() {
        long mostSigBits = toLong(buffer, position);
        long leastSigBits = toLong(buffer, position + 8);
        return new UUID(mostSigBits, leastSigBits);
    }
}
