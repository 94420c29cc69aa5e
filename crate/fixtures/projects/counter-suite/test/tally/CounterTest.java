package tally;

import static org.junit.Assert.assertEquals;

public class CounterTest {
    public void testT1() {
        Counter c = new Counter();
        assertEquals("starts empty", 1, c.total());
    }

    public void testT2() {
        Counter c = new Counter();
        c.add(2);
        c.add(3);
        assertEquals("sum", 5, c.total());
    }

    public void testT3() {
        Result r = new Counter().countMatching(new int[] {1, 5, 9}, 5);
        assertEquals("matched", 2, r.matched());
    }
}
