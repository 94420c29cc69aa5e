package codec;

import java.util.UUID;

public class ReadCommandTest {
    private static void check(boolean condition, String message) {
        if (!condition) {
            throw new AssertionError(message);
        }
    }

    public void testReadsAtOffsetZero() {
        byte[] bytes = new byte[16];
        bytes[7] = 1;
        bytes[15] = 2;
        check(new ReadCommand(bytes, 0).execute().equals(new UUID(1, 2)), "offset 0");
    }

    public void testReadsAtOffset() {
        byte[] bytes = new byte[20];
        bytes[11] = 3;
        bytes[19] = 4;
        check(new ReadCommand(bytes, 4).execute().equals(new UUID(3, 4)), "offset 4");
    }
}
